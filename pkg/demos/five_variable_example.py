"""A singular polynomial that is not the specialization of a single Jack
polynomial.

In five variables with hook shape (3,1,1), two distinct labels share the
spectral vector (4,3,2,1,0) at kappa = 1/2.  Neither specialization is
singular on its own, but one fixed combination is killed by every Dunkl
operator and is invariant.  Run me with
`python3 demos/five_variable_example.py`.
"""

from fractions import Fraction

from nsjack import construct_jack, rsyt_from_contents, specialize
from nsjack.jack import spectral_vector_at
from nsjack.operators import dunkl

kappa = Fraction(1, 2)
t = rsyt_from_contents((-2, -1, 2, 1, 0))
t_prime = rsyt_from_contents((-2, 2, 1, -1, 0))
alpha, beta = (3, 2, 0, 0, 0), (1, 1, 2, 1, 0)

print("labels:")
print(f"  alpha = {alpha} with tableau\n{t}\n")
print(f"  beta  = {beta} with tableau\n{t_prime}\n")
za = spectral_vector_at(alpha, t, kappa)
zb = spectral_vector_at(beta, t_prime, kappa)
print(f"spectral vectors at kappa = 1/2: {za} and {zb} (identical)\n")

j1 = specialize(construct_jack(alpha, t), kappa)
j2 = specialize(construct_jack(beta, t_prime), kappa)
print(f"first polynomial: {len({e for e, _ in j1.terms})} distinct monomials")

for name, poly in (("first", j1), ("second", j2), ("first + 2*second", j1 + j2.scale(Fraction(2)))):
    killed = sum(1 for i in range(1, 6) if dunkl(i, poly, kappa).is_zero())
    print(f"  {name}: {killed} of 5 Dunkl operators kill it")
