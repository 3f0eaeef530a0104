"""Laplacian spectra and the product resistance formula.

Run:  python3 demos/04_spectra_and_products.py
"""

import numpy as np

from resnet import (
    cycle,
    cycle_spectrum,
    hypercube,
    hypercube_spectrum,
    network_spectrum,
    path,
    path_spectrum,
    product_resistance,
    product_spectrum,
    resistance_exact,
    resistance_spectral,
)

print("== structured spectra ==")
sp = path_spectrum(4)
print("path(4) eigenvalues:", np.round(sp.values, 6))
sc = cycle_spectrum(4)
print("cycle(4) eigenvalues:", sc.values, " (the 4-cycle basis is pinned)")
print(sc.vectors)

print()
print("== products add eigenvalues, vectors multiply entrywise ==")
prod = product_spectrum(path_spectrum(2), cycle_spectrum(4))
print("path(2) x cycle(4) eigenvalues:", prod.values)
sh = hypercube_spectrum(3)
print("hypercube(3) eigenvalues:", sh.values)
print("every cube eigenvector entry has magnitude (sqrt(2)/2)^3:",
      bool(np.allclose(np.abs(sh.vectors), (np.sqrt(2) / 2) ** 3)))

print()
print("== resistance out of a spectrum ==")
print("cube antipodal, spectral:", resistance_spectral(sh, 0, 7))
print("cube antipodal, exact:   ", resistance_exact(hypercube(3), 0, 7))

print()
print("== the product formula skips building the product ==")
sg, sc4 = path_spectrum(2), cycle_spectrum(4)
rg = resistance_exact(path(2), 0, 1)
rh = resistance_exact(cycle(4), 0, 2)
val = product_resistance(sg, sc4, rg, rh, 0, 0, 1, 2)
print("path(2) x cycle(4), far corners:", val, " (the cube again: 5/6)")

print()
print("== generic spectra handle anything symmetric ==")
spec = network_spectrum(cycle(5))
print("cycle(5) eigenvalues:", np.round(spec.values, 6))
print("pentagon spectral vs exact:",
      resistance_spectral(spec, 0, 2), "vs", resistance_exact(cycle(5), 0, 2))
