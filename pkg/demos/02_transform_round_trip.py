"""Aronson transform of a few classic sets, and recovering them from their inverses."""

from aronson.oracles import LowerWythoff, Primes, Squares
from aronson.transform import InverseOracle, aronson_transform, inverse_aronson, oracle_sequence

for oracle in (Squares(), Primes(), LowerWythoff()):
    t = aronson_transform(oracle, 1, 12)
    print(f"T({oracle.spec:8})", t.terms)

for oracle in (Squares(), Primes(), LowerWythoff()):
    alpha = oracle_sequence(oracle, 40)
    inv = inverse_aronson(alpha, 12)
    print(f"inv({oracle.spec:8})", inv.terms)

# the inverse of 10^4 squares runs to 10^8; the range oracle keeps it small
alpha = oracle_sequence(Squares(), 10_000)
back = aronson_transform(InverseOracle(alpha), 1, 10_000)
print("round trip of 10^4 squares:", back.terms == alpha.terms)
