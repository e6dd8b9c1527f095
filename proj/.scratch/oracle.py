import math, cmath

N = 64

def horner(coeffs, z):
    acc = 0j
    for a in reversed(coeffs):
        acc = acc * z + a
    return acc

def gsum(q, n):
    # 1 + q + ... + q^{n-1}
    s = 0.0
    p = 1.0
    for _ in range(n):
        s += p
        p *= q
    return s

def qdiff(coeffs, q):
    # output[n-1] = a_n * [n]_q
    out = [0j] * max(len(coeffs) - 1, 1)
    s = 0.0
    p = 1.0
    for n in range(1, len(coeffs)):
        s += p
        p *= q
        out[n - 1] = coeffs[n] * s
    return out

def catalog(tag, order):
    a = [0j] * (order + 1)
    for n in range(1, order + 1):
        if tag == 'identity':
            v = 1.0 if n == 1 else 0.0
        elif tag == 'cayley_plus':
            v = 1.0
        elif tag == 'cayley_minus':
            v = (-1.0) ** (n - 1)
        elif tag == 'koebe_plus':
            v = float(n)
        elif tag == 'koebe_minus':
            v = (-1.0) ** (n - 1) * n
        elif tag == 'lemniscate_plus':
            v = 1.0 if n % 2 == 1 else 0.0
        elif tag == 'lemniscate_minus':
            v = 0.0 if n % 2 == 0 else (-1.0) ** ((n - 1) // 2)
        elif tag == 'hexic_plus':
            v = [1, 1, 0, -1, -1, 0][(n - 1) % 6]
        elif tag == 'hexic_minus':
            v = [1, -1, 0, 1, -1, 0][(n - 1) % 6]
        a[n] = complex(v)
    return a

def grid_points(radii=(0.5, 0.8, 0.95), M=720):
    for r in radii:
        for k in range(M):
            yield r * cmath.exp(2j * math.pi * k / M)

tags = ['identity','cayley_plus','cayley_minus','koebe_plus','koebe_minus',
        'lemniscate_plus','lemniscate_minus','hexic_plus','hexic_minus']

print("=== 1. classical starlike margins per catalog fn (N=64, default grid) ===")
for tag in tags:
    a = catalog(tag, N)
    d = qdiff(a, 1.0)
    worst = float('inf'); wit = None; n_small = 0
    for r in (0.5, 0.8, 0.95):
        m_r = float('inf')
        for k in range(720):
            z = r * cmath.exp(2j * math.pi * k / 720)
            gz = horner(a, z)
            if abs(gz) < 1e-12:
                n_small += 1
                continue
            w = z * horner(d, z) / gz
            m_r = min(m_r, w.real)
        if m_r < worst:
            worst = m_r
        print(f"  {tag:18s} r={r}: min Re(zg'/g) = {m_r:.6g}")
    print(f"  {tag:18s} WORST {worst:.6g} smallpts={n_small}")

print("=== 2. f=z+2z^2 (order 64 padded) checks at q=0.5 ===")
f = [0j]*(N+1); f[1] = 1; f[2] = 2
q = 0.5
d = qdiff(f, q)
g = catalog('cayley_plus', N)
R = 1/(1-q)
worst_kq = float('inf'); wit_kq = None
worst_ratio = float('inf'); wit_ratio = None; n_inc = 0
worst_def = float('inf'); wit_def = None
for z in grid_points():
    gz = horner(g, z)
    w = z / gz * horner(d, z)
    m = R - abs(w - R)
    if m < worst_kq: worst_kq, wit_kq = m, z
    fz = horner(f, z)
    if abs(fz) < 1e-12:
        n_inc += 1
    else:
        m2 = 1 - abs(horner(f, q*z) / fz)
        if m2 < worst_ratio: worst_ratio, wit_ratio = m2, z
        m3 = R - abs(z / fz * horner(d, z) - R)
        if m3 < worst_def: worst_def, wit_def = m3, z
print(f"  check_kq worst={worst_kq:.4f} witness={wit_kq:.4f}")
print(f"  ratio   worst={worst_ratio:.4f} witness={wit_ratio:.4f} inconclusive={n_inc}")
print(f"  sq_def  worst={worst_def:.4f} witness={wit_def:.4f}")

print("=== 3. qdilog_scaled check_kq vs cayley at q in {0.3,0.5,0.7} (N=64) ===")
for q in (0.3, 0.5, 0.7):
    a = [0j]*(N+1)
    for n in range(1, N+1):
        a[n] = (1-q) / (n * (1 - q**n))
    d = qdiff(a, q)
    g = catalog('cayley_plus', N)
    R = 1/(1-q)
    worst = float('inf'); wit = None
    for z in grid_points():
        w = z / horner(g, z) * horner(d, z)
        m = R - abs(w - R)
        if m < worst: worst, wit = m, z
    # tail note for f at 0.95
    mx = max(abs(c) for c in a)
    tail = mx * 0.95**(N+1) / 0.05
    print(f"  q={q}: worst margin {worst:.6f} witness {wit:.3f} tail_note(f)={tail:.4f}")
    # sq_star def & ratio agreement at q=0.5
    if q == 0.5:
        wd = float('inf'); wr = float('inf')
        for z in grid_points():
            fz = horner(a, z)
            wd = min(wd, R - abs(z/fz*horner(d, z) - R))
            wr = min(wr, 1 - abs(horner(a, q*z)/fz))
        print(f"    sq_def worst {wd:.6f}; sq_ratio worst {wr:.6f} (both same sign?)")

print("=== 4. series1 identity deviation (double pipeline) ===")
for q in (0.5, 0.9):
    # LHS: n=1 ->1 ; n>=2: (n + n(n-1)(1+q)/2)/S_n
    # RHS: psi coeffs 1/S_n; zPsi' coeff n*psi_n (via two exact-integer qdiff at q=1); etc
    psi = [0j]*(N+1)
    for n in range(1, N+1):
        psi[n] = 1.0 / gsum(q, n)
    d1 = qdiff(psi, 1.0)          # index m -> (m+1) psi_{m+1}
    d2 = qdiff(d1, 1.0)           # index m -> (m+2)(m+1) psi_{m+2}
    rhs = [0j]*(N+1)
    for n in range(1, N+1):
        t = d1[n-1]               # n*psi_n
        if n >= 2:
            t = t + (1+q)/2 * d2[n-2] * 1.0
        rhs[n] = t
    dev = 0.0
    for n in range(1, N+1):
        if n == 1:
            lhs = 1.0
        else:
            lhs = (n + n*(n-1)*(1+q)/2) / gsum(q, n)
        dev = max(dev, abs(rhs[n].real - lhs))
    print(f"  q={q}: max dev {dev:.3e}")

print("=== 5. kq series vs recurrence ===")
for q in (0.1, 0.5, 0.9):
    L = -2*math.log(q)
    order = 50
    u = [0.0]*(order)           # u[n] for n=1..order-1 at exp level
    # k_q = z*exp(sum u_n z^n); exp to order-1
    M_ = order - 1
    un = [0.0]*(M_+1)
    for n in range(1, M_+1):
        un[n] = L / (1 - q**n)
    E = [0.0]*(M_+1)
    E[0] = 1.0
    for n in range(1, M_+1):
        s = 0.0
        for k in range(1, n+1):
            s += k * un[k] * E[n-k]
        E[n] = s / n
    c_series = [0.0]*(order+1)
    for n in range(1, order+1):
        c_series[n] = E[n-1]
    # recurrence
    c = [0.0]*(order+1)
    c[1] = 1.0
    c[2] = L / (1 - q)
    for n in range(3, order+1):
        s = L/(1 - q**(n-1)) * (n-1)
        for k in range(2, n):
            s += L/(1 - q**(k-1)) * c[n+1-k] * (k-1)
        c[n] = s / (n-1)
    rel = max(abs(c[n]-c_series[n])/abs(c[n]) for n in range(2, order+1))
    print(f"  q={q}: max rel dev {rel:.3e}  c2={c[2]:.6f} c3={c[3]:.6f} c50={c[50]:.4e}")

print("=== 6. classical limits (q=1-1e-6, n<=20) ===")
q = 1 - 1e-6
worst = 0.0
for n in range(2, 21):
    v = (n + n*(n-1)*(1+q)/2) / gsum(q, n)
    worst = max(worst, abs(v-n)/n)
print(f"  kq_bound rel dev from n: {worst:.3e}")
worst = 0.0
for n in range(2, 21):
    prod = (1+q)/(q*gsum(q, n-1))
    for k in range(2, n):
        prod *= 1 + (1+q)/(q*gsum(q, k-1))
    worst = max(worst, abs(prod-n)/n)
print(f"  sq_product rel dev from n: {worst:.3e}")
def ref_bound(n, q, ref):
    S = gsum(q, n)
    if ref == 'identity':  return (1+q)/S
    if ref == 'cayley':    return (n + q*(n-1))/S
    if ref == 'koebe':     return (n + n*(n-1)*(1+q)/2)/S
    if ref == 'lemniscate':
        return ((n/2*(1+q) + (1-q)/2)/S) if n % 2 == 1 else ((1+q)*(n/2)/S)
    if ref == 'hexic':
        m = n % 3
        if m == 2:  return ((2-q)/3 + 2*n/3*(1+q))/S   # n=3m-1
        if m == 0:  return (1+q)*(2*n/3)/S
        return (2*n/3*(1+q) + (1-2*q)/3)/S             # n=3m+1
worst = {}
for n in range(2, 21):
    for ref, classical in [('identity', 2/n), ('cayley', (2*n-1)/n),
                           ('lemniscate', 1.0),
                           ('hexic', (4*n+1)/(3*n) if n % 3 == 2 else (4/3 if n % 3 == 0 else (4*n-1)/(3*n)))]:
        d = abs(ref_bound(n, q, ref) - classical)/classical
        worst[ref] = max(worst.get(ref, 0), d)
print(f"  corollary rel devs: {worst}")

print("=== 7. radius estimate (sq_product @ q=0.5, N=200) ===")
q = 0.5
A = [0.0]*(201)
for n in range(2, 201):
    prod = (1+q)/(q*gsum(q, n-1))
    for k in range(2, n):
        prod *= 1 + (1+q)/(q*gsum(q, k-1))
    A[n] = prod
rats = [A[n]/A[n+1] for n in range(180, 200)]
est = sum(rats)/len(rats)
print(f"  estimate {est:.6f} target 0.4 rel dev {abs(est-0.4)/0.4:.2e}  A200={A[200]:.3e}")

print("=== 8. B_n = 1/n exactness for scaled qdilog ===")
for q in (0.3, 0.5, 0.7):
    worst = 0.0
    for n in range(1, N+1):
        qn = q**n
        An = (1-q)/(n*(1-qn))
        Bn = An * gsum(q, n)
        worst = max(worst, abs(Bn - 1.0/n))
    print(f"  q={q}: max |B_n - 1/n| = {worst:.3e}")

print("=== 9. identity (ii) values at q=0.5 n=4 ===")
q = 0.5
left = (1-q**2)/(1-q**4)
right = (1-q**2)*(1-q**4)/((1-q**3)*(1-q**5))
print(f"  left={left} right={right}")

print("=== 10. heine telescoping closed form check ===")
q = 0.5
worst = 0.0
cn = 1.0
for n in range(0, 65):
    if n > 0:
        m = n - 1
        cn *= (1 - q*q**m)*(1 - q*q**m)/((1 - q**2*q**m)*(1 - q**(m+1)))
    closed = (1-q)/(1-q**(n+1))
    worst = max(worst, abs(cn - closed))
print(f"  max |phi_n - closed| = {worst:.3e}")

print("=== 11. criterion-11 corpus margins (q=0.5 unless noted) ===")
def kq_margin(acoef, gtag, q, order=N):
    d = qdiff(acoef, q)
    g = catalog(gtag, order)
    R = 1/(1-q)
    worst = float('inf'); wit=None
    for z in grid_points():
        w = z / horner(g, z) * horner(d, z)
        m = R - abs(w - R)
        if m < worst: worst, wit = m, z
    return worst, wit
q = 0.5
# psi
psi = [0j]*(N+1)
for n in range(1, N+1): psi[n] = 1/gsum(q, n)
print("  psi vs cayley:", kq_margin(psi, 'cayley_plus', q)[0])
# koebe-rule backsolve B_n = 1/(n+1)
Acoef = [0j]*(N+1)
acc = 0.0
for n in range(1, N+1):
    acc += 1.0/n      # sum_{k=0}^{n-1} B_k with B_k=1/(k+1)
    Acoef[n] = acc / gsum(q, n)
print("  harmonic/koebe-rule vs koebe:", kq_margin(Acoef, 'koebe_plus', q)[0])
# odd lemniscate B_{2n-1} = 1/(2n-1)
Acoef = [0j]*(N+1)
for n in range(1, N+1, 2):
    Acoef[n] = (1.0/n) / gsum(q, n)
print("  odd 1/(2n-1) vs lemniscate:", kq_margin(Acoef, 'lemniscate_plus', q)[0])
# two-step alternating B = 1,0,1,0...
Acoef = [0j]*(N+1)
for n in range(1, N+1, 2):
    Acoef[n] = 1.0 / gsum(q, n)
print("  alternating vs lemniscate:", kq_margin(Acoef, 'lemniscate_plus', q)[0])
# hexic period-6 B
pat = [1, 1, 0, -1, -1, 0]
Acoef = [0j]*(N+1)
for n in range(1, N+1):
    Acoef[n] = pat[(n-1) % 6] / gsum(q, n)
print("  hexic-pattern vs hexic:", kq_margin(Acoef, 'hexic_plus', q)[0])
# f = z vs cayley
Acoef = [0j]*(N+1); Acoef[1] = 1
print("  f=z vs cayley:", kq_margin(Acoef, 'cayley_plus', q)[0])
# qdilog via monotone at 0.3/0.5/0.7 already done above

print("=== 12. catalog f=g kq-vs-lemma & limit consistency (q=0.5 and 1-1e-4) ===")
for qq in (0.5, 1-1e-4):
    print(f"  q={qq}")
    for tag in tags:
        a = catalog(tag, N)
        d = qdiff(a, qq)
        R = 1/(1-qq)
        wk = float('inf'); wl = float('inf'); bad=0
        for z in grid_points():
            gz = horner(a, z)
            if abs(gz) < 1e-12:
                bad += 1
                continue
            w = z/gz*horner(d, z)
            wk = min(wk, R - abs(w - R))
            wl = min(wl, 1 - abs(gz + horner(a, qq*z) - horner(a, z))/abs(gz))
        print(f"    {tag:18s} kq_worst={wk:.4g} lemma_worst={wl:.4g} lemma*(R)={wl/(1-qq):.4g} g_small={bad}")
