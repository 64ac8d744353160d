#!/usr/bin/env python3
"""Information curves at fixed source noise, next to the noiseless ones.

Sweeps Bob's error rate q from its floor p/2 (source noise alone) up to
1/2 and tabulates the shared information between Alice and Bob against
Eve's best achievable information, for both phase branches of her
attack.  The noiseless curves run alongside: extra source noise lowers
what Eve can learn at the same observed error rate.
"""

from sixstate import analysis

P = 0.05

points = analysis.curve_sweep(P, steps=11)

print(f"Information curves at source noise p={P}")
print("=" * 76)
print(f"{'q':>7} {'I_AB':>10} {'I_AE opt':>10} {'I_AE alt':>10} "
      f"{'I_AE pure':>10} {'beta^2':>8}")
for pt in points:
    print(f"{pt.q:7.4f} {pt.i_ab:10.6f} {pt.i_ae_opt:10.6f} "
          f"{pt.i_ae_alt:10.6f} {pt.i_ae_pure:10.6f} {pt.beta_sq:8.5f}")

print()
print("Readings:")
print(f"- At q = p/2 = {P/2} Eve's curve starts at exactly 0: reproducing")
print("  the noise floor forces her probes to coincide, so she learns nothing.")
drop = max(pt.i_ae_pure - pt.i_ae_opt for pt in points)
print(f"- Her noisy-source curve sits below the noiseless one everywhere")
print(f"  (largest gap in this sweep: {drop:.4f} bits).")
print("- The opposed-phase branch (I_AE alt) is consistently the weaker")
print("  strategy; the aligned-phase optimum dominates it at every q.")

cross = analysis.crossing_point(P)
print(f"- The curves cross at q = {cross.q_cross:.6f}: below that error rate")
print("  Alice and Bob hold the information advantage needed for a key.")
