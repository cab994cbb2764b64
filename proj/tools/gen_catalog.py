#!/usr/bin/env python3
"""Builds the permutation generator data for the group catalog.

Writes data/groups.dat and the embedded copy in src/catalog_data.cpp.
Every group is constructed from first principles and its order is
re-verified with sympy's independent Schreier-Sims before being emitted:

  * M24 from the classical action on the projective line over F23, and
    the binary Golay code as the extended quadratic-residue code on the
    same coordinates (weight distribution checked).
  * M12 and M12.2 as dodecad/duum stabilizers inside M24, M11 as a point
    stabilizer of M12, M22 and M22.2 as the stabilizers of an ordered
    resp. unordered point pair.
  * U3(3) from unitary 3x3 matrices over F9 acting on the 28 isotropic
    points of the Hermitian form; the Hall-Janko graph assembled from
    the rank-3 orbitals on 1+36+63 points (verified SRG(100,36,14,12));
    J2 and J2.2 as automorphism groups of that graph.
  * PSL(2,q) on the projective line over Fq.

Takes several minutes; meant to be run once, outputs are committed.
"""

import itertools
import random
import sys

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

random.seed(20240901)
try:
    import sympy.core.random as _sr
    _sr.seed(20240901)
except Exception:
    pass


def padded(p, n):
    lst = p.list()
    return list(lst) + list(range(len(lst), n))


def verify_order(gens, n, expected, name):
    G = PermutationGroup([Permutation(g) for g in gens])
    o = G.order()
    if o != expected:
        raise SystemExit(f"{name}: order {o}, expected {expected}")
    print(f"  {name}: order {o} ok ({len(gens)} gens, degree {n})")
    return G


def reduce_gens(G, target, deg, tries=400):
    """Replace a large generating set by two or three random elements."""
    for _ in range(tries):
        x, y = G.random(), G.random()
        if x.is_Identity or y.is_Identity:
            continue
        if PermutationGroup([x, y]).order() == target:
            return [padded(x, deg), padded(y, deg)]
    for _ in range(tries):
        x, y, z = G.random(), G.random(), G.random()
        if PermutationGroup([x, y, z]).order() == target:
            return [padded(x, deg), padded(y, deg), padded(z, deg)]
    raise SystemExit("generator reduction failed")


# --------------------------------------------------------------------------
# M24 on P1(F23) = {0..22, infinity=23}
# --------------------------------------------------------------------------

INF = 23


def perm_from_map(f):
    return Permutation([f(t) for t in range(24)])


def inv23(x):
    return pow(x, 21, 23)


SQUARES23 = {(i * i) % 23 for i in range(1, 23)}


def build_m24():
    a = perm_from_map(lambda t: INF if t == INF else (t + 1) % 23)
    b = perm_from_map(lambda t: INF if t == INF else (3 * t) % 23)
    c = perm_from_map(
        lambda t: 0 if t == INF else (INF if t == 0 else (-inv23(t)) % 23))

    def dmap(t):
        if t in (INF, 0):
            return t
        cc = pow(t, 3, 23)
        return (cc * inv23(9)) % 23 if t in SQUARES23 else (9 * cc) % 23

    d = perm_from_map(dmap)
    return [a, b, c, d]


def golay_code():
    # cyclic QR code of length 23 with generator 1+x^2+x^4+x^5+x^6+x^10+x^11,
    # extended by a parity bit at coordinate 23
    g1 = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]
    basis = []
    for s in range(12):
        w = 0
        for i, cf in enumerate(g1):
            if cf:
                w ^= 1 << ((i + s) % 23)
        if bin(w).count('1') % 2 == 1:
            w |= 1 << 23
        basis.append(w)
    bs = []
    for w in basis:
        cur = w
        for bv in bs:
            cur = min(cur, cur ^ bv)
        if cur:
            bs.append(cur)
        bs.sort(reverse=True)
    assert len(bs) == 12
    code = set()
    for mask in range(1 << 12):
        w = 0
        for i in range(12):
            if mask >> i & 1:
                w ^= bs[i]
        code.add(w)
    from collections import Counter
    wd = Counter(bin(w).count('1') for w in code)
    assert dict(wd) == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    return code, bs


def apply_perm_word(p, w):
    out = 0
    for i in range(24):
        if w >> i & 1:
            out |= 1 << p(i)
    return out


def restrict(perm, pts, index):
    return Permutation([index[perm(p)] for p in pts])


def build_mathieu_family():
    print("M24 / Golay constructions:")
    m24_gens = build_m24()
    M24 = verify_order([padded(g, 24) for g in m24_gens], 24, 244823040, "M24")
    code, basis = golay_code()
    for g in m24_gens:
        assert all(apply_perm_word(g, bv) in code for bv in basis)
    print("  Golay code invariant under M24: ok")

    dodecads = [w for w in code if bin(w).count('1') == 12]
    D = frozenset(i for i in range(24) if min(dodecads) >> i & 1)
    Dc = frozenset(range(24)) - D

    # set-orbit of the dodecad with transversal, then Schreier generators
    reps = {D: Permutation(23)}
    queue = [D]
    qi = 0
    while qi < len(queue):
        X = queue[qi]
        qi += 1
        for g in m24_gens:
            Y = frozenset(g(i) for i in X)
            if Y not in reps:
                reps[Y] = reps[X] * g
                queue.append(Y)
    assert len(reps) == 2576 and Dc in reps

    stab_gens = []
    M12set = None
    for X in queue:
        for g in m24_gens:
            Y = frozenset(g(i) for i in X)
            sg = reps[X] * g * (reps[Y] ** -1)
            if sg.is_Identity:
                continue
            stab_gens.append(sg)
            if len(stab_gens) >= 2:
                Gtry = PermutationGroup(stab_gens)
                if Gtry.order() == 95040:
                    M12set = Gtry
                    break
        if M12set:
            break
    assert M12set is not None

    Dl = sorted(D)
    idx12 = {p: i for i, p in enumerate(Dl)}
    M12 = PermutationGroup([restrict(g, Dl, idx12) for g in M12set.generators])
    assert M12.order() == 95040

    tau = reps[Dc]
    M12_2 = PermutationGroup(M12set.generators + [tau])
    assert M12_2.order() == 190080

    st11 = M12.stabilizer(11)
    ident11 = {i: i for i in range(11)}
    M11 = PermutationGroup(
        [restrict(g, list(range(11)), ident11) for g in st11.generators])
    assert M11.order() == 7920

    # M22 = pointwise stabilizer of {22,23}; M22.2 adds a swap of the pair
    st2322 = M24.stabilizer(23).stabilizer(22)
    ident22 = {i: i for i in range(22)}
    M22 = PermutationGroup(
        [restrict(g, list(range(22)), ident22) for g in st2322.generators])
    assert M22.order() == 443520

    u = next(g for g in M24.orbit_transversal(23) if g(23) == 22)
    x = u(22)
    st22g = M24.stabilizer(22)
    v = next(g for g in st22g.orbit_transversal(x) if g(x) == 23)
    swap = u * v
    assert swap(23) == 22 and swap(22) == 23
    M22_2 = PermutationGroup(
        [restrict(g, list(range(22)), ident22)
         for g in st2322.generators + [swap]])
    assert M22_2.order() == 887040

    # a PSL(2,11) subgroup of M11 in the same degree-11 action
    def rand_of_order(G, k):
        while True:
            r = G.random()
            o = r.order()
            if o % k == 0:
                return r ** (o // k)

    x11 = rand_of_order(M11, 11)
    L211 = None
    for _ in range(200):
        y = rand_of_order(M11, 2)
        H = PermutationGroup([x11, y])
        if H.order() == 660:
            L211 = H
            break
    assert L211 is not None

    out = {}
    out['M11'] = (11, 7920, reduce_gens(M11, 7920, 11))
    out['M12'] = (12, 95040, reduce_gens(M12, 95040, 12))
    out['M22'] = (22, 443520, reduce_gens(M22, 443520, 22))
    out['M12.2'] = (24, 190080, reduce_gens(M12_2, 190080, 24))
    out['M22.2'] = (22, 887040, reduce_gens(M22_2, 887040, 22))
    out['L2(11)inM11'] = (11, 660, reduce_gens(L211, 660, 11))
    for name, (deg, o, gens) in out.items():
        verify_order(gens, deg, o, name)
    # containment checks for the reduction-test subgroup
    M11v = PermutationGroup([Permutation(g) for g in out['M11'][2]])
    assert all(M11v.contains(Permutation(g)) for g in out['L2(11)inM11'][2])
    print("  L2(11)inM11 contained in M11: ok")
    return out


# --------------------------------------------------------------------------
# F9 arithmetic and U3(3) -> Hall-Janko graph -> J2, J2.2
# --------------------------------------------------------------------------

def f9_add(x, y):
    return (x % 3 + y % 3) % 3 + 3 * ((x // 3 + y // 3) % 3)


def f9_neg(x):
    return (-x % 3) % 3 + 3 * ((-(x // 3)) % 3)


def f9_mul(x, y):
    a, b, c, d = x % 3, x // 3, y % 3, y // 3
    return (a * c - b * d) % 3 + 3 * ((a * d + b * c) % 3)


def f9_conj(x):
    return x % 3 + 3 * ((-(x // 3)) % 3)


def f9_inv(x):
    for y in range(1, 9):
        if f9_mul(x, y) == 1:
            return y
    raise ZeroDivisionError


def mat_mul(A, B):
    C = [0] * 9
    for i in range(3):
        for j in range(3):
            s = 0
            for k in range(3):
                s = f9_add(s, f9_mul(A[3 * i + k], B[3 * k + j]))
            C[3 * i + j] = s
    return tuple(C)


def vec_mat(x, M):
    return tuple(
        f9_add(f9_add(f9_mul(x[0], M[j]), f9_mul(x[1], M[3 + j])),
               f9_mul(x[2], M[6 + j])) for j in range(3))


def herm(x, y):
    # antidiagonal Hermitian form x0*conj(y2) + x1*conj(y1) + x2*conj(y0)
    return f9_add(
        f9_add(f9_mul(x[0], f9_conj(y[2])), f9_mul(x[1], f9_conj(y[1]))),
        f9_mul(x[2], f9_conj(y[0])))


def normalize(v):
    for c in v:
        if c != 0:
            ic = f9_inv(c)
            return tuple(f9_mul(ic, x) for x in v)
    return None


def mat_order(M):
    I = (1, 0, 0, 0, 1, 0, 0, 0, 1)
    k, X = 1, M
    while X != I:
        X = mat_mul(X, M)
        k += 1
    return k


def build_j2_family():
    print("U3(3) / Hall-Janko constructions:")
    prim = next(x for x in range(2, 9) if mat_order(
        (x, 0, 0, 0, 1, 0, 0, 0, f9_inv(x))) == 8)

    def unitriangular(a, b):
        return (1, a, b, 0, 1, f9_neg(f9_conj(a)), 0, 0, 1)

    unis = [unitriangular(a, b) for a in range(9) for b in range(9)
            if f9_add(f9_add(b, f9_conj(b)), f9_mul(a, f9_conj(a))) == 0
            and (a, b) != (0, 0)]
    torus = (prim, 0, 0, 0, f9_mul(prim, prim), 0, 0, 0,
             f9_inv(f9_mul(f9_mul(prim, prim), prim)))
    weyl = (0, 0, 1, 0, 2, 0, 1, 0, 0)
    gens_mat = [unis[0], unis[-1], torus, weyl]

    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for M in gens_mat:
        rows = [vec_mat(e, M) for e in basis]
        for i in range(3):
            for j in range(3):
                assert herm(rows[i], rows[j]) == herm(basis[i], basis[j])

    pts = sorted({normalize(v)
                  for v in itertools.product(range(9), repeat=3)
                  if v != (0, 0, 0)})
    iso = [p for p in pts if herm(p, p) == 0]
    noniso = [p for p in pts if herm(p, p) != 0]
    assert len(iso) == 28 and len(noniso) == 63
    iso_idx = {p: i for i, p in enumerate(iso)}
    non_idx = {p: i for i, p in enumerate(noniso)}

    def perm_on_iso(M):
        return Permutation(
            [iso_idx[normalize(vec_mat(iso[i], M))] for i in range(28)])

    def perm_on_non(M):
        return Permutation(
            [non_idx[normalize(vec_mat(noniso[i], M))] for i in range(63)])

    U28 = PermutationGroup([perm_on_iso(M) for M in gens_mat])
    assert U28.order() == 6048
    print("  U3(3) on 28 isotropic points: order 6048 ok")

    # an L2(7) subgroup by random search over matrix words
    def rand_word():
        w = gens_mat[0]
        for _ in range(random.randint(3, 20)):
            w = mat_mul(w, random.choice(gens_mat))
        return w

    def rand_mat_of_order(k):
        while True:
            M = rand_word()
            o = mat_order(M)
            if o % k == 0:
                X = M
                for _ in range(o // k - 1):
                    X = mat_mul(X, M)
                return X

    L_mats = None
    for _ in range(500):
        x7, y2 = rand_mat_of_order(7), rand_mat_of_order(2)
        if PermutationGroup([perm_on_iso(x7), perm_on_iso(y2)]).order() == 168:
            L_mats = [x7, y2]
            break
    assert L_mats is not None
    L28 = PermutationGroup([perm_on_iso(M) for M in L_mats])
    print("  L2(7) subgroup found")

    # 36 right cosets of L2(7)
    def m_inv(A):
        M = [list(A[0:3]) + [1, 0, 0], list(A[3:6]) + [0, 1, 0],
             list(A[6:9]) + [0, 0, 1]]
        for col in range(3):
            p = next(r for r in range(col, 3) if M[r][col] != 0)
            M[col], M[p] = M[p], M[col]
            ic = f9_inv(M[col][col])
            M[col] = [f9_mul(ic, x) for x in M[col]]
            for r in range(3):
                if r != col and M[r][col] != 0:
                    nf = f9_neg(M[r][col])
                    M[r] = [f9_add(M[r][j], f9_mul(nf, M[col][j]))
                            for j in range(6)]
        return tuple(M[0][3:] + M[1][3:] + M[2][3:])

    def in_L_coset(M, R):
        return L28.contains(perm_on_iso(mat_mul(M, m_inv(R))))

    cosets = [(1, 0, 0, 0, 1, 0, 0, 0, 1)]
    qi = 0
    while qi < len(cosets):
        R = cosets[qi]
        qi += 1
        for g in gens_mat:
            M = mat_mul(R, g)
            if not any(in_L_coset(M, S) for S in cosets):
                cosets.append(M)
    assert len(cosets) == 36

    def coset_index(M):
        for j, S in enumerate(cosets):
            if in_L_coset(M, S):
                return j
        raise KeyError

    def perm_on_A(M):
        return Permutation([coset_index(mat_mul(cosets[i], M))
                            for i in range(36)])

    UA = [perm_on_A(M) for M in gens_mat]
    UB = [perm_on_non(M) for M in gens_mat]
    LA = [perm_on_A(M) for M in L_mats]
    LB = [perm_on_non(M) for M in L_mats]

    def orbits_of(perms, n):
        seen = [False] * n
        orbs = []
        for s in range(n):
            if seen[s]:
                continue
            orb = [s]
            seen[s] = True
            qi = 0
            while qi < len(orb):
                for p in perms:
                    y = p(orb[qi])
                    if not seen[y]:
                        seen[y] = True
                        orb.append(y)
                qi += 1
            orbs.append(sorted(orb))
        return orbs

    def orbital(p0, permsX, permsY):
        seen = {p0}
        queue = [p0]
        qi = 0
        while qi < len(queue):
            x, y = queue[qi]
            qi += 1
            for gx, gy in zip(permsX, permsY):
                q = (gx(x), gy(y))
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen

    # rank-3 graph on 1+36+63: A-A from the two 7-suborbits of L2(7),
    # A-B from its 21-suborbit on B, B-B from the 24-suborbit of a
    # point stabilizer.
    A_orbs = orbits_of(LA, 36)
    B_orbs = orbits_of(LB, 63)
    assert sorted(len(o) for o in A_orbs) == [1, 7, 7, 21]
    assert sorted(len(o) for o in B_orbs) == [21, 42]
    U63 = PermutationGroup(UB)
    BB_orbs = orbits_of(U63.stabilizer(0).generators, 63)
    assert sorted(len(o) for o in BB_orbs) == [1, 6, 24, 32]

    G = np.zeros((100, 100), dtype=np.int8)
    G[0, 1:37] = 1
    G[1:37, 0] = 1
    for o in (o for o in A_orbs if len(o) == 7):
        for x, y in orbital((0, o[0]), UA, UA):
            G[1 + x, 1 + y] = 1
    o21 = next(o for o in B_orbs if len(o) == 21)
    for x, y in orbital((0, o21[0]), UA, UB):
        G[1 + x, 37 + y] = 1
        G[37 + y, 1 + x] = 1
    o24 = next(o for o in BB_orbs if len(o) == 24)
    for x, y in orbital((0, o24[0]), UB, UB):
        G[37 + x, 37 + y] = 1

    S = (G.astype(np.int32)) @ (G.astype(np.int32))
    assert (G == G.T).all() and set(G.sum(1)) == {36}
    for i in range(100):
        for j in range(100):
            if i == j:
                continue
            assert S[i, j] == (14 if G[i, j] else 12)
    print("  Hall-Janko graph: SRG(100,36,14,12) ok")

    # automorphism DFS over a BFS vertex ordering with bitmask pruning
    n = 100
    adj = [int(sum(1 << j for j in range(n) if G[i, j])) for i in range(n)]
    FULL = (1 << n) - 1
    order = [0]
    seen = {0}
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        for w in range(n):
            if G[v, w] and w not in seen:
                seen.add(w)
                order.append(w)

    def automorphisms(first_image, limit):
        cand0 = [FULL] * n
        cand0[order[0]] = 1 << first_image
        stack = [(0, cand0, {})]
        found = 0
        while stack and found < limit:
            k, cand, mapping = stack.pop()
            if k == n:
                found += 1
                yield mapping
                continue
            v = order[k]
            cm = cand[v]
            while cm:
                w = cm & (-cm)
                cm ^= w
                wi = w.bit_length() - 1
                newcand = cand[:]
                ok = True
                for u in order[k + 1:]:
                    c = newcand[u] & ~w
                    c = c & adj[wi] if G[v, u] else c & ~adj[wi]
                    if c == 0:
                        ok = False
                        break
                    newcand[u] = c
                if ok:
                    nm = dict(mapping)
                    nm[v] = wi
                    stack.append((k + 1, newcand, nm))

    U100 = [Permutation([0] + [1 + pa(i) for i in range(36)]
                        + [37 + pb(i) for i in range(63)])
            for pa, pb in zip(UA, UB)]
    mp = next(automorphisms(1, 1))
    g = Permutation([mp[i] for i in range(n)])
    H = PermutationGroup(U100 + [g])
    if H.order() == 604800:
        # g was a J2-type automorphism; extend by an outer one fixing 0
        J2 = H
        outer = None
        for mp in automorphisms(0, 60):
            h = Permutation([mp[i] for i in range(n)])
            if not J2.contains(h):
                outer = h
                break
        assert outer is not None
        J22 = PermutationGroup(U100 + [g, outer])
    else:
        # g already generates the full automorphism group
        assert H.order() == 1209600
        J22 = H
        J2 = J22.derived_subgroup()
    assert J22.order() == 1209600
    assert J2.order() == 604800
    print("  J2: order 604800 ok")
    print("  J2.2: order 1209600 ok")

    out = {
        'J2': (100, 604800, reduce_gens(J2, 604800, 100)),
        'J2.2': (100, 1209600, reduce_gens(J22, 1209600, 100)),
    }
    for name, (deg, o, gens) in out.items():
        verify_order(gens, deg, o, name)
    return out


# --------------------------------------------------------------------------
# PSL(2,q) on the projective line
# --------------------------------------------------------------------------

def build_psl_family():
    print("PSL(2,q) constructions:")
    out = {}
    for q in (7, 11, 17):
        inf = q
        a = Permutation([(t + 1) % q for t in range(q)] + [inf])

        def cmap(t, q=q, inf=inf):
            if t == inf:
                return 0
            if t == 0:
                return inf
            return (-pow(t, q - 2, q)) % q

        c = Permutation([cmap(t) for t in range(q + 1)])
        expected = q * (q * q - 1) // 2
        gens = [padded(a, q + 1), padded(c, q + 1)]
        verify_order(gens, q + 1, expected, f"PSL(2,{q})")
        out[f"PSL(2,{q})"] = (q + 1, expected, gens)
    return out


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------

def cycle_string(images):
    n = len(images)
    seen = [False] * n
    parts = []
    for s in range(n):
        if seen[s] or images[s] == s:
            seen[s] = True
            continue
        cyc = [s]
        seen[s] = True
        t = images[s]
        while t != s:
            cyc.append(t)
            seen[t] = True
            t = images[t]
        parts.append("(" + ",".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "()"


def main():
    entries = {}
    entries.update(build_mathieu_family())
    entries.update(build_j2_family())
    entries.update(build_psl_family())

    names = ['M11', 'M12', 'M22', 'J2', 'M12.2', 'M22.2', 'J2.2',
             'PSL(2,7)', 'PSL(2,11)', 'PSL(2,17)', 'L2(11)inM11']
    lines = []
    for name in names:
        deg, order, gens = entries[name]
        lines.append(f"name {name}")
        lines.append(f"degree {deg}")
        lines.append(f"order {order}")
        for g in gens:
            lines.append(f"gen {cycle_string(g)}")
        lines.append("")
    text = "\n".join(lines)

    with open('data/groups.dat', 'w') as f:
        f.write(text)
    print("wrote data/groups.dat")

    with open('src/catalog_data.cpp', 'w') as f:
        f.write('// Embedded copy of data/groups.dat; regenerate with '
                'tools/gen_catalog.py.\n')
        f.write('#include "rackcheck/catalog.hpp"\n\n')
        f.write('namespace rackcheck {\n\n')
        f.write('const char* embedded_group_data() {\n')
        f.write('  return R"GRPDATA(\n')
        f.write(text)
        f.write(')GRPDATA" + 1;\n')
        f.write('}\n\n')
        f.write('}  // namespace rackcheck\n')
    print("wrote src/catalog_data.cpp")


if __name__ == '__main__':
    sys.exit(main())
