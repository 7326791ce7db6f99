"""Tour of the special-function layer.

The bounds are built from three ingredients: the modified Bessel functions
K0/K1 (kernels of the semirelativistic Green's functions), the sharp Young
convolution constants, and the q-norms of the Green's functions.  This script
evaluates each and checks the analytic anchors they must reproduce.
"""

import math

from salpeter_bounds import specfun as sf

print("Modified Bessel functions")
print(f"{'x':>8} {'K0(x)':>24} {'K1(x)':>24}")
for x in (0.01, 0.1, 1.0, 2.0, 5.0, 20.0, 100.0):
    print(f"{x:8.2f} {sf.bessel_k0(x):24.16e} {sf.bessel_k1(x):24.16e}")
print(f"small-x: K0 ~ -ln(x/2) - gamma  ->  K0(1e-8) = {sf.bessel_k0(1e-8):.12f}")
print(f"small-x: x K1(x) -> 1           ->  1e-8 * K1(1e-8) = {1e-8 * sf.bessel_k1(1e-8):.12f}")
print(f"underflow: K0(700) = {sf.bessel_k0(700.0)} (values below 1e-300 report 0)")
print()

print("Sharp Young constants C_p (best constants of the convolution inequality)")
for p in (1.0, 4.0 / 3.0, 1.5, 2.0):
    print(f"  C_{p:<6.4g} = {sf.young_constant(p):.12f}")
print("interior values lie strictly below 1; the endpoints give exactly 1")
print()

print("Combined constant entering the bounds (equals 1 at q = 1 and q = 2)")
for q in (1.0, 1.2, 4.0 / 3.0, 1.5, 2.0):
    print(f"  q = {q:<8.4g} -> {sf.combined_constant(q):.12f}")
print()

print("Green's-function norm integrals and their analytic anchors")
i1 = sf.k1_power_integral(1.0)
print(f"  int_0^inf x K1(x) dx   = {i1:.14f}   (pi/2 = {math.pi / 2:.14f})")
i0 = sf.k0_power_integral(1.0)
print(f"  int_0^inf K0(x) dx     = {i0:.14f}   (pi/2)")
i02 = sf.k0_power_integral(2.0)
print(f"  int_0^inf K0(x)^2 dx   = {i02:.14f}   (pi^2/4 = {math.pi**2 / 4:.14f})")
print()

print("Green's-function q-norms: ||G||_1 * alpha * m = 1 exactly")
for m in (0.5, 1.0, 3.0):
    for alpha in (1, 2):
        v3 = sf.green_norm_3d(1.0, m, alpha) * alpha * m
        v1 = sf.green_norm_1d(1.0, m, alpha) * alpha * m
        print(f"  m={m:<4} alpha={alpha}:  3D -> {v3:.12f}   1D -> {v1:.12f}")
print()
print("3D norms exist only for 1 <= q < 3/2 (the K1 pole); 1D for all q >= 1:")
print(f"  ||G3||_1.4  at m=1, alpha=2: {sf.green_norm_3d(1.4, 1.0, 2):.10f}")
print(f"  ||G1||_3.0  at m=1, alpha=2: {sf.green_norm_1d(3.0, 1.0, 2):.10f}")
