"""15-point Gauss-Kronrod rule on [-1, 1].

The odd-index Kronrod nodes are the 7 Gauss-Legendre nodes, so one batch of
15 integrand evaluations yields both the K15 value and the embedded G7 value
for error estimation.  Exactness (degree 22 for K15, 13 for G7) is asserted
by the test suite.
"""
import numpy as np

XK = np.array([
    -0.99145537112081263921,
    -0.94910791234275852453,
    -0.86486442335976907279,
    -0.74153118559939443986,
    -0.58608723546769113029,
    -0.40584515137739716691,
    -0.20778495500789846760,
    0.0,
    0.20778495500789846760,
    0.40584515137739716691,
    0.58608723546769113029,
    0.74153118559939443986,
    0.86486442335976907279,
    0.94910791234275852453,
    0.99145537112081263921,
])

WK = np.array([
    0.022935322010529224964,
    0.063092092629978553291,
    0.10479001032225018384,
    0.14065325971552591875,
    0.16900472663926790283,
    0.19035057806478540991,
    0.20443294007529889241,
    0.20948214108472782801,
    0.20443294007529889241,
    0.19035057806478540991,
    0.16900472663926790283,
    0.14065325971552591875,
    0.10479001032225018384,
    0.063092092629978553291,
    0.022935322010529224964,
])

# Gauss-7 weights, matching the nodes XK[1::2]
WG = np.array([
    0.12948496616886969327,
    0.27970539148927666790,
    0.38183005050511894495,
    0.41795918367346938776,
    0.38183005050511894495,
    0.27970539148927666790,
    0.12948496616886969327,
])
