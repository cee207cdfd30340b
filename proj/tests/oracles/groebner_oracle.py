"""Independent sympy oracle for frozen Groebner/elimination expected values."""
import sympy as sp
from sympy import I, Rational, groebner, reduced, symbols

x, y, z = symbols("x y z")
print("NF(x^3-z | x^2-y, lex):", reduced(x**3 - z, [x**2 - y], x, y, z, order="lex")[1])
print("NF(x^2y | x^2-y, grevlex):", reduced(x**2 * y, [x**2 - y], x, y, order="grevlex")[1])
print("GB(xy-1, y^2-1, lex):", list(groebner([x * y - 1, y**2 - 1], x, y, order="lex")))

v, t, z1, z2, z3, w1, w2 = symbols("v t z1 z2 z3 w1 w2")
G = groebner([z1 - v, z2 - v * t, z3 - v * t**2], v, t, z1, z2, z3, order="lex")
print("Whitney elimination:", [g for g in G.exprs if not g.has(v) and not g.has(t)])

# complexified umbrella: x_j=(z_j+w_j)/2, y_j=(z_j-w_j)/(2i)
X1, Y1, X2, Y2 = (z1 + w1) / 2, (z1 - w1) / (2 * I), (z2 + w2) / 2, (z2 - w2) / (2 * I)
umb = [sp.expand(X2 * (X1**2 + Y1**2) - X1**3), sp.expand(Y2)]
print("umbrella complexified:", umb)
G = groebner(umb, w1, w2, z1, z2, order="lex")
print("umbrella elimination:", [g for g in G.exprs if not g.has(w1) and not g.has(w2)])
stick = [sp.expand(X1), sp.expand(Y1), sp.expand(Y2)]
G = groebner(stick, w1, w2, z1, z2, order="lex")
print("stick elimination:", [g for g in G.exprs if not g.has(w1) and not g.has(w2)])
G = groebner([z1 * w1 + z2 * w2 - 1], w1, w2, z1, z2, order="lex")
print("sphere elimination:", [g for g in G.exprs if not g.has(w1) and not g.has(w2)])

t1, t2 = symbols("t1 t2")
for name, phi, ts in [("t,t^2", [t, t**2], [t]), ("t1,t2,t1t2", [t1, t2, t1 * t2], [t1, t2]),
                      ("t1+i t2,0", [t1 + I * t2, 0], [t1, t2])]:
    zs = [z1, z2, z3][: len(phi)]
    G = groebner([zj - p for zj, p in zip(zs, phi)], *ts, *zs, order="lex")
    print("param", name, [g for g in G.exprs if not any(g.has(s) for s in ts)])
print("cube:", sp.Poly(sp.expand(((z1 + w1) / 2) ** 3), z1, w1).terms())
