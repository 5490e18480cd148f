# Homology and holonomy of the ten closed flat 3-manifold groups A..J.
# The printed H1 values are frozen in flat_homology (src/flat.cpp) and
# re-derived from the same affine generators by tests/bieberbach.hpp.
from fractions import Fraction as Fr
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form
import itertools
h=Fr(1,2)
D=lambda *d: Matrix.diag(*d)
GROUPS={
 'A':[],
 'B':[(D(-1,-1,1),(0,0,h))],
 'C':[(Matrix([[0,-1,0],[1,-1,0],[0,0,1]]),(0,0,Fr(1,3)))],
 'D':[(Matrix([[0,-1,0],[1,0,0],[0,0,1]]),(0,0,Fr(1,4)))],
 'E':[(Matrix([[1,-1,0],[1,0,0],[0,0,1]]),(0,0,Fr(1,6)))],
 'F':[(D(1,-1,-1),(h,h,0)),(D(-1,1,-1),(0,h,h))],
 'G':[(D(1,1,-1),(h,0,0))],
 'H':[(Matrix([[1,0,0],[0,0,1],[0,1,0]]),(h,0,0))],
 'I':[(D(1,1,-1),(h,0,0)),(D(-1,1,-1),(0,h,0))],
 'J':[(D(1,1,-1),(h,0,0)),(D(-1,1,-1),(0,h,h))],
}
def mul(x,y):
    A,a=x; B,b=y; s=A*Matrix(b); return (A*B, tuple(Fr(int(s[i].p),int(s[i].q))+a[i] for i in range(3)))
def order(A):
    n=1; X=A
    while X!=Matrix.eye(3): X=X*A; n+=1
    return n
for name,gens in GROUPS.items():
    # generators: t1,t2,t3 = 0,1,2 ; alphas 3..
    ng=3+len(gens); rels=[]
    for i,j in itertools.combinations(range(3),2): rels.append([(i,1),(j,1),(i,-1),(j,-1)])
    for k,(A,a) in enumerate(gens):
        for j in range(3):
            v=A[:,j]; r=[(3+k,1),(j,1),(3+k,-1)]+[(i,-int(v[i])) for i in range(3) if v[i]!=0][::-1]
            rels.append(r)
    if len(gens)==1: hol_rels=[[0]*order(gens[0][0])]
    elif len(gens)==2: hol_rels=[[0,0],[1,1],[0,1,0,1]]
    else: hol_rels=[]
    for hr in hol_rels:
        x=(Matrix.eye(3),(0,0,0))
        for g in hr: x=mul(x,gens[g])
        assert x[0]==Matrix.eye(3) and all(Fr(t).denominator==1 for t in x[1])
        r=[(3+g,1) for g in hr]+[(i,-int(x[1][i])) for i in range(3) if x[1][i]!=0][::-1]
        rels.append(r)
    M=Matrix([[sum(e for g,e in r if g==c) for c in range(ng)] for r in rels])
    S=smith_normal_form(M,domain=ZZ); d=[abs(S[i,i]) for i in range(min(S.shape)) if S[i,i]!=0]
    # holonomy
    grp={tuple(Matrix.eye(3))}; fr=[Matrix.eye(3)]
    while fr:
        nf=[]
        for X in fr:
            for A,_ in gens:
                Y=X*A
                if tuple(Y) not in grp: grp.add(tuple(Y)); nf.append(Y)
        fr=nf
    dets=sorted(set(Matrix(3,3,list(t)).det() for t in grp))
    els=[order(Matrix(3,3,list(t))) for t in grp]
    print(name, 'H1 rank',ng-len(d),'torsion',[x for x in d if x!=1],'|hol|',len(grp),'maxord',max(els),'dets',dets)
