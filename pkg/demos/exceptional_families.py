"""
Exceptional families
====================

The tabulated lists for the seven exceptional family sizes, with the
unique-maximum check and the first-entry labels.
"""

from almost_special import exceptional as ex

for record in ex.families():
    print(f"|c| = {record.family_size}, Gamma_c = {record.gamma}")
    for key in record.keys:
        groups = ", ".join(f"{g}({g.order})" for g in record.lists[key])
        print(f"   L({key}) = {groups}")
    print("   unique max:", all(ex.check_unique_max(record).values()))
    print("   almost special:", " ".join(ex.almost_special(record)))

# dimensions for the size 17 family; '?' marks the entry the source leaves unknown
for key, dims in ex.e8_lists(ex.family(17)).items():
    print(key, dims)
