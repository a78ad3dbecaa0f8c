# coding: utf-8

# # Line graphs of trees
#
# The line graph of a tree is a block graph. Its mu can be read off three
# ways. All three should match mu of the tree itself.

# In[1]:

from mvtree import brute_force_mu, line_graph, mu_block_graph, mu_line_graph_of_tree, mu_tree, random_tree

t = random_tree(9, seed=4)
lg = line_graph(t)
print(t.edges)


# In[2]:

print(mu_line_graph_of_tree(t), mu_block_graph(lg), brute_force_mu(lg).mu, mu_tree(t).mu)
