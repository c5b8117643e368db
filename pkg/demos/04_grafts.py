"""Connected sum as a 1-strand graft, and the 2-strand graft law for parallels."""

from knotforge import bracket, connected_sum, corpus, embed, graft, jones, parallel, parallel_annular, planar

k1, k2 = corpus.load("3_1"), corpus.load("4_1")
s = connected_sum(k1, k2)
print(f"3_1 # 4_1: {s.n} crossings")
print("  J(sum)         ", jones(s).t_string())
print("  J(3_1) J(4_1)  ", (jones(k1) * jones(k2)).t_string())

# grafting the 2-parallels along both strands gives the 2-parallel of the sum
g = planar(graft(parallel_annular(embed(k1), 2), parallel_annular(embed(k2), 2), 2))
lhs, rhs = bracket(parallel(s, 2)), bracket(g)
print(f"<(3_1#4_1)^2> == <3_1^2 graft_2 4_1^2>: {lhs == rhs}  ({g.n} crossings)")
