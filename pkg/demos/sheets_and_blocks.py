"""
Sheets of sl(n) and the largest Jordan block
============================================

Sheet dimensions from the Jordan type agree with the span of the orbit
tangent and the curves that keep the centralizer dimension fixed.  For a
nilpotent Jordan block partition, dim z - dim [z, z] equals the largest part.
"""

from liestrata.matrix_lie import default_scan_types, nilpotent_block_identity, sheet_scan

print("n  type                                   z   [z,z]  orbit  sheet  equal")
for row in sheet_scan(default_scan_types(4)):
    t = row.jordan_type
    print(f"{t.size}  {str(t):38} {row.dim_centralizer:2d}  {row.dim_derived:5d}  "
          f"{row.dim_orbit:5d}  {row.dim_sheet:5d}  {row.sheet_eq}")

print()
print("partition        dim z  dim [z,z]  largest part")
for m in range(1, 6):
    for r in nilpotent_block_identity(m):
        print(f"{str(r.partition):15}  {r.centralizer_dim:5d}  {r.derived_dim:9d}  {r.largest:12d}")
