"""
Singularity invariants
======================

What the continued-fraction and cone machinery computes downstream:
resolutions of cyclic quotient singularities, lens spaces, cusp cycles
and monomial plane curves.
"""

from latticecf import graphs, singularities as sing

# The minimal resolution of the cyclic quotient singularity of type
# (11, 7) is a chain of four rational curves, weights = negated
# subtractive partial quotients of 11/7.
t = sing.HJType(11, 7)
res = sing.hj_resolution(t)
print("resolution chain:", [v.weight for v in res.vertices])
print("negative definite:", graphs.is_contractible(res))
print("fundamental cycle:", graphs.fundamental_cycle(res).coefficients)

# Embedding dimension: closed formula, cross-checked by brute force over
# the dual-cone semigroup.
print("embdim:", sing.embdim(t), "= oracle:", sing.embdim_oracle(t))

# One blow-up of the singular point extracts the chain ends and every
# curve of weight <= -3; each remaining gap is again a cyclic quotient.
print("after one blow-up:", [str(x) if x else "smooth" for x in sing.blowup_types(t)])

# Lens spaces L(p, q) bound these singularities; oriented classification
# is by p and the pair {q, q^-1 mod p}, reversal sends q to p - q.
print("L(11,7) ~ L(11,8):", sing.lens_oriented_equal(sing.LensSpace(11, 7), sing.LensSpace(11, 8)))
print("-L(11,7) =", sing.lens_reverse(sing.LensSpace(11, 7)))

# Cusp boundaries are torus fibrations encoded by cyclic weight sequences;
# the monodromy is a product of elementary matrices and its trace has a
# closed continuant expression.
c = sing.CuspCycle((2, 3, 2, 2))
m = sing.cusp_monodromy(c)
print("monodromy:", m.rows(), " trace:", m.a + m.d, "=", sing.cusp_trace_formula(c))

# Reversing the orientation of the cusp dualizes the cycle by the block
# rule; the trace is preserved.
print("dual cycle:", sing.cusp_dual(c), " dual of (4):", sing.cusp_dual(sing.CuspCycle((4,))))

# The minimal embedded resolution of x^11 = y^4, with curves labelled in
# order of appearance; an independent blow-up simulator reproduces it.
curve = sing.resolve_monomial(11, 4)
print("x^11 = y^4 needs", len(curve), "blow-ups")
print(graphs.to_dot(curve.graph))
print("blow-up simulation agrees:", curve == sing.blowup_oracle(11, 4))
