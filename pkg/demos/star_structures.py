"""
Involutions and what they do to the spectrum
============================================

A star structure is a conjugate-linear involutive automorphism.  Each
character phi then pairs with the conjugate character x -> conj(phi(x*)),
and the pairing permutes the spectrum.  Different stars on the same
algebra permute it differently, as the two stars on the Z_4 convolution
algebra below show.
"""

import numpy as np

from gelfand import (
    abelian_group,
    abelian_group_algebra,
    characters,
    conjugate_character,
    involution,
)

algebra, reversal = abelian_group_algebra(abelian_group([4]))
space = characters(algebra)

# The built-in star reverses group elements and conjugates coefficients.
# Applying it twice is the identity, exactly, not just within roundoff.
rng = np.random.default_rng(3)
x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
print("star is involutive:",
      bool(np.array_equal(reversal.star(reversal.star(x)), x)))


def describe(star, label):
    print(label)
    for k, phi in enumerate(space):
        psi, self_paired = conjugate_character(star, phi)
        partner = min(
            range(len(space)),
            key=lambda j: float(np.max(np.abs(space[j].values - psi.values))))
        tag = "itself" if self_paired else f"character {partner}"
        print(f"  character {k} pairs with {tag}")


# Under the reversal star every character is self-conjugate: character
# values are unit-modulus, so conjugating phi(d_a) and replacing a by -a
# cancel each other.  This is the pairing that makes transforms of
# self-adjoint elements real.
describe(reversal, "group-reversal star:")

# Plain coefficientwise conjugation is also a legitimate star here
# because the structure constants are real.  It swaps the two complex
# characters of Z_4 and fixes only the two real ones.
plain = involution(algebra, np.eye(4))
describe(plain, "plain-conjugation star:")

# Self-adjoint elements under the reversal star: x + x* has real
# transform because every character is its own conjugate.
sa = x + reversal.star(x)
print("self-adjoint residual:", float(np.max(np.abs(reversal.star(sa) - sa))))
print("imag part of transform:",
      float(np.max(np.abs(space.transform(sa).imag))))
