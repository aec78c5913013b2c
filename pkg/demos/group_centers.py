"""
Class functions of non-abelian groups
=====================================

The full convolution algebra of a non-abelian group is not commutative,
but its center, spanned by conjugacy-class sums, is.  Its characters
are in bijection with the conjugacy classes, which this script counts
for the three classic small examples.
"""

from gelfand import (
    center_algebra,
    characters,
    conjugacy_classes,
    dihedral_group_4,
    quaternion_group,
    symmetric_group_3,
)

for name, group in [("S3", symmetric_group_3()),
                    ("D4", dihedral_group_4()),
                    ("Q8", quaternion_group())]:
    partition = conjugacy_classes(group)
    algebra, star = center_algebra(group)
    space = characters(algebra)
    sizes = "+".join(str(s) for s in sorted(partition.sizes))
    print(f"{name}: order {group.order} = {sizes} over "
          f"{len(partition)} classes, {len(space)} center characters")

# For S3 the three center characters correspond to the three irreducible
# representations; their values on class sums are scaled irreducible
# characters.  The counts match because the center of the group algebra
# always splits into one line per class.
group = symmetric_group_3()
partition = conjugacy_classes(group)
algebra, _ = center_algebra(group)
for k, phi in enumerate(characters(algebra)):
    rounded = [complex(round(v.real, 8), round(v.imag, 8))
               for v in phi.values]
    print(f"S3 center character {k}: {rounded}")
