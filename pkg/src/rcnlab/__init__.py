"""rcnlab: exact-arithmetic workbench for low-crossing drawings of K_n.

Submodules:

* exactgeom     exact rational points and robust predicates
* counter       brute-force exact crossing counters (pairs / quads routes)
* formulas      counting functions, recurrences, closed forms, limits
* constructions exact-coordinate drawing generators with self-validation
* drawingio     the on-disk drawing format
* report        reproductions of the reference tables and figures
* cli           the `rcn` command line
"""

__version__ = "0.1.0"
