"""Bracket, Jones polynomial and extreme states of the bundled trefoil."""

from knotforge import adequacy, bracket, corpus, jones, writhe
from knotforge.bracket import t_breadth

d = corpus.load("3_1")
br = bracket(d)
j = jones(d, br=br)
rep = adequacy(d)

print(f"PD            {[list(c) for c in d.pd]}")
print(f"writhe        {writhe(d)}")
print(f"<D>           {br}   (breadth {br.breadth()[2]})")
print(f"J(t)          {j.t_string()}   (breadth {t_breadth(j)})")
print(f"|s+D|, |s-D|  {rep.s_plus_circles}, {rep.s_minus_circles}")
print(f"adequate      {rep.adequate}")
# for an adequate diagram the bracket breadth is 2n + 2|s+| + 2|s-| - 4
print(f"2n+2|s+|+2|s-|-4 = {2 * d.n + 2 * rep.s_plus_circles + 2 * rep.s_minus_circles - 4}")
