"""Independent sympy oracle for values frozen into the C++ tests.

Run: python3 tests/oracles/derive_values.py
"""
import sympy as sp

x, y, z, e = sp.symbols("x y z e")
V = (x, y, z)


def hessian(f):
    return sp.Matrix(3, 3, lambda i, j: sp.diff(f, V[i], V[j]))


def bordered(f, g):
    h = hessian(f)
    grad = [sp.diff(g, v) for v in V]
    m = sp.zeros(4, 4)
    for i in range(3):
        for j in range(3):
            m[i, j] = h[i, j]
        m[i, 3] = grad[i]
        m[3, i] = grad[i]
    return m


def jac(f, g, h):
    return sp.Matrix([[sp.diff(p, v) for v in V] for p in (f, g, h)])


# Klein quartic family
FK = x**3 * y + y**3 * z + z**3 * x
PhiK = sp.expand(-sp.Rational(1, 54) * hessian(FK).det())
print("Phi_K =", PhiK)
PsiK = sp.expand(-sp.Rational(1, 9) * bordered(FK, PhiK).det())
print("Psi_K terms =", len(PsiK.as_ordered_terms()), "deg", sp.Poly(PsiK, *V).total_degree())
print("Psi_K coefficient of x^14 :", sp.Poly(PsiK, *V).coeff_monomial(x**14))
print("Psi_K coeff x^13*y:", sp.Poly(PsiK, *V).coeff_monomial(x**13*y))
singular_phi = sp.expand(hessian(FK).det())
singular_psi = sp.expand(bordered(FK, singular_phi).det())
print("singular Phi / Phi_K =", sp.simplify(singular_phi / PhiK))
print("singular Psi / Psi_K =", sp.simplify(singular_psi / PsiK))
XK = sp.expand(jac(FK, PhiK, PsiK).det())
print("X_K deg", sp.Poly(XK, *V).total_degree(), "terms", len(XK.as_ordered_terms()))
print("X_K coeff x^20*y:", sp.Poly(XK, *V).coeff_monomial(x**20 * y))

# Wiman sextic
W = 10*x**3*y**3 + 9*x**5*z + 9*y**5*z - 45*x**2*y**2*z**2 - 135*x*y*z**4 + 27*z**6
print("dW/dz at (0,0,1) =", sp.diff(W, z).subs({x: 0, y: 0, z: 1}))

# Icosahedral group in Wiman coordinates over Q[e]/(4e^2+3e+9)
g = 4*e**2 + 3*e + 9
FI = x*y + e*z**2
PsiI = sp.expand(bordered(FI, W).det())
XI = jac(FI, W, PsiI).det()
val = sp.expand(XI.subs({x: 1, y: 0, z: 0}))
print("X_I'(1,0,0) mod g =", sp.rem(sp.Poly(val, e), sp.Poly(g, e)))

# Hessian of a quadric
print("det H(x^2+y^2+z^2) =", hessian(x**2 + y**2 + z**2).det())

# Full Klein forms, frozen verbatim in the unit tests
print("Psi_K =", PsiK)
print("X_K =", XK)

# Valentiner family in Wiman coordinates
PhiV = sp.expand(hessian(W).det())
PsiV = sp.expand(bordered(W, PhiV).det())
pv = sp.Poly(PsiV, *V)
print("Phi_V' terms", len(PhiV.as_ordered_terms()), "coeff z^12:", sp.Poly(PhiV, *V).coeff_monomial(z**12))
print("Psi_V' deg", pv.total_degree(), "terms", len(pv.terms()), "coeff z^30:", pv.coeff_monomial(z**30))
XV = sp.Poly(sp.expand(jac(W, PhiV, PsiV).det()), *V)
print("X_V' deg", XV.total_degree(), "terms", len(XV.terms()), "coeff x^45:", XV.coeff_monomial(x**45),
      "coeff y^45:", XV.coeff_monomial(y**45))
