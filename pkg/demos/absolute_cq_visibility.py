# coding: utf-8

# # Sets visible to a mutual-visibility set Q
#
# Given an MV set Q, we look for the largest sets W outside Q such that every
# pair in W and every (Q, W) pair can see each other.

# In[1]:

from mvtree import maximal_absolute_cq_visible_sets, oracle_maximal_absolute_cq_sets, tree_from_edge_list

t = tree_from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
q = (2, 3)


# Constructed from the tree's structure:

# In[2]:

print(maximal_absolute_cq_visible_sets(t, q))


# Exhaustive search over every subset of V minus Q:

# In[3]:

print(oracle_maximal_absolute_cq_sets(t, q))
