"""Build a few self-describing sequences three different ways and compare them."""

from aronson.closedform import a_closed, e_closed
from aronson.engine import Mode, RuleSpec, generate
from aronson.oracles import Multiples, Odds
from aronson.squares import SquareConstraint, solve_square

# a: n is a term exactly when a(n) is odd
a = generate(RuleSpec(oracle=Odds()), 30)
print("a     ", a.terms)
print("closed", tuple(a_closed(n) for n in range(1, 31)))

# the same terms fall out of a'(a'(n)) = 2n + 3 once the first three values are pinned
s = solve_square(SquareConstraint(2, 3, 1, ((1, 1), (2, 4), (3, 6)), start=2), 30)
print("solver", s.terms, s == a)

# the false version of the same sentence, with d(1) = 2 forced
d = generate(RuleSpec(oracle=Odds(), mode=Mode.NEGATED_IFF, seeds=(2,)), 15)
print("d     ", d.terms)

# multiples of three with e(1) = 2 gives e(e(n)) = 3n
e = generate(RuleSpec(oracle=Multiples(3), seeds=(2,)), 20)
print("e     ", e.terms)
print("e(e(n)) / n", {e(e(n)) // n for n in range(1, 7)})
print("closed", e.terms == tuple(e_closed(n) for n in range(1, 21)))
