"""Sign-switch toy model in the free product of three copies of Z.

How many sign switches a <-> a^-1 does it take to trivialise a word, allowing
free cancellation in between?  Two obstructions answer most small cases:
the image in the free product of three copies of Z/2 (switches cannot change
it), and half the total absolute exponent sum (each switch moves one
generator's sum by exactly 2).
"""

from braidcert.words import (
    format_toy_word,
    parse_toy_word,
    toy_normal_form,
    toy_switch_feasible,
    toy_switch_lower_bound,
)

# An irreducible word: no amount of switching helps, because its mod-2 image
# is already a reduced nonempty word in the involution group.
w = parse_toy_word("a b c b a b c a")
print("word:                 ", format_toy_word(w))
print("switchable to trivial?", toy_switch_feasible(w))

# This one is trivial mod 2, and the exponent sums +4, -2, +4 say that at
# least (4 + 2 + 4) / 2 = 5 switches are needed.
w2 = parse_toy_word("a^4 b^2 c^4 b^-4")
print()
print("word:                 ", format_toy_word(w2))
print("normal form:          ", format_toy_word(toy_normal_form(w2)))
print("switchable to trivial?", toy_switch_feasible(w2))
print("switches needed >=    ", toy_switch_lower_bound(w2))

# Five switches do suffice here: flip two a's, one b, and two c's --
# a^4 -> a^2 a^-2, c^4 -> c^2 c^-2 and b^2 b^-4 -> b^2 b^-2 after one flip,
# each cancelling freely.
