"""
Building LDPC codes on expander graphs
======================================

Four constructions, smallest useful sizes.  Variables sit on the left of a
bipartite Tanner graph; checks either enforce a single parity or membership
in a short local code.
"""

from fractions import Fraction

from expandercodes import gf2, graphs, subcodes, tanner

# A biregular Tanner graph with plain parity checks.  Every variable touches
# c checks, every check touches d variables, and the pairing is a random
# simple configuration.
g_a = tanner.build_case_a(c=3, d=6, n=12, seed=7)
print("plain biregular:", g_a.n_vars, "variables,", g_a.n_checks, "checks")
print("rate bound:", tanner.expander_params(g_a).rate_bound)

# Same skeleton, but each check now demands that its 6 neighbors form a
# word of the [6,5] single parity code.  Any short code of the right length
# works here; stronger local codes buy stronger distance statements later.
g_b = tanner.build_case_b(3, 6, 12, subcodes.builtin("spc6"), seed=7)
print("labelled biregular:", g_b.n_checks, "checks, label",
      g_b.labels[0].name)

# Variables on the edges of a complete graph, one check per vertex.  The
# base graph is ordinary (not bipartite); its edges become the codeword
# coordinates and each vertex constrains its incident edges.
k5 = graphs.named_graph("k5")
g_c = tanner.build_case_c(k5, subcodes.builtin("spc4"))
print("edge-variable code on K5:", g_c.n_vars, "edge variables,",
      g_c.n_checks, "vertex checks")

# The bipartite version: edges of a complete bipartite graph, with possibly
# different local codes on the two sides.
base = graphs.complete_bipartite(3, 2)
g_d = tanner.build_case_d(base, subcodes.builtin("rep2"),
                          subcodes.builtin("spc3"))
params = tanner.expander_params(g_d)
print("two-sided edge code:", g_d.n_vars, "variables, rate bound",
      params.rate_bound)

# Every graph expands to a plain parity-check matrix.  Labelled checks
# contribute one row per row of their local code.
h = g_d.to_parity_matrix()
print("expanded parity-check matrix:", h.rows, "x", h.cols)

# The alist text format round-trips the matrix for interchange with other
# LDPC tools.
alist = gf2.to_alist(h)
print("alist header:", alist.splitlines()[0])
assert gf2.parse_alist(alist).bits.tolist() == h.bits.tolist()

# JSON round-trips the full Tanner graph, labels included.
doc = g_d.to_json()
again = tanner.TannerGraph.from_json(doc)
print("JSON round trip ok:", again.n_vars == g_d.n_vars)

# Exact code parameters by brute enumeration, fine at desk scale.
cp = gf2.code_params(h)
print(f"code is [{cp.n},{cp.k},{cp.dmin}], relative distance",
      Fraction(cp.dmin, cp.n))
