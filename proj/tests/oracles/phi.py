# Direct evaluation of phi_k^{(m)}(n) term by term: python3 phi.py n k M
from mpmath import mp, mpf, mpc, zeta, pi, log, exp, sqrt, sin, cot, gamma, bernpoly, bernoulli, factorial, findroot, diff, rgamma
from math import gcd
import sys
mp.dps = 150
a = zeta(3); zp = zeta(-1, derivative=1)
c2 = 3*mpf(2)**(-mpf(2)/3)*a**(mpf(1)/3)
def A(x, g):
    s = mpf(0); j=0
    while True:
        t = x**j/factorial(j)*rgamma((3-g+j)/2)
        s += t
        if j>20 and abs(t) < s*mpf(10)**(-mp.dps-5): break
        j+=1
    return s/2
def C(h,k):
    return k/mpf(2)*sum(bernpoly(2,mpf(j)/k)*log(abs(2*sin(pi*j*h/k))) for j in range(1,k))
def vp(p,h,k):
    if p==1:
        return 1j*k**2/mpf(6)*sum(bernpoly(3,mpf(d)/k)*cot(pi*d*h/k) for d in range(1,k))
    s=0
    for d in range(1,k+1):
        for dd in range(1,k+1):
            s += bernpoly(p+2,mpf(dd)/k)*bernpoly(p,mpf(d)/k)*mp.expjpi(2*((d*dd*h)%k)/mpf(k))
    return (-k**2)**p/(factorial(p)*p*(p+2))*s
def bco(h,k,M):
    v=[0]+[vp(p,h,k) for p in range(1,M+1)]
    b=[mpc(1)]
    for m in range(1,M+1):
        b.append(sum(j*v[j]*b[m-j] for j in range(1,m+1))/m)
    return b
def phi_terms(n,k,M):
    hs=[h for h in range(k) if gcd(h,k)==1] if k>1 else [0]
    c = sqrt(a/k**3); x=c*n
    pref = exp(k*zp)/k*(a/k)**(mpf(1)/2+mpf(k)/24)
    bs={h:bco(h,k,M) for h in hs}
    out=[]
    for m in range(M+1):
        Am = A(x, -mpf(k)/12-m)*c**m
        s=0
        for h in hs:
            s += mp.expjpi(-2*((n*h)%k)/mpf(k))*exp(C(h,k))*bs[h][m]
        out.append(pref*s*Am)
    return out
n=int(sys.argv[1]); k=int(sys.argv[2]); M=int(sys.argv[3])
t=phi_terms(n,k,M)
tot=0
for m,x in enumerate(t):
    tot+=x
    print(m, mp.nstr(x.real,15), mp.nstr(x.imag,5), mp.nstr(tot.real, 30))
