# coding: utf-8

# # Counting maximum mutual-visibility sets in trees
#
# In a tree, a set of vertices is mutually visible when no member sits on the
# path between two others. The largest such sets have exactly one vertex per
# leaf, so mu(T) is the leaf count.

# In[1]:

from mvtree import legs, mu_tree, oracle_mv_family, r_mu, spider_tree

t = spider_tree([1, 2, 3])
print(t.edges)


# The fast routine and the brute-force oracle should agree.

# In[2]:

print(mu_tree(t))
print(oracle_mv_family(t).mu)


# Each leg contributes one choice per vertex, so the number of maximum sets is
# the product of leg lengths.

# In[3]:

print([leg.length for leg in legs(t)])
print(r_mu(t))
print(oracle_mv_family(t).maximum_sets)
