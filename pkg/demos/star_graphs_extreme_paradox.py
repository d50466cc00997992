"""
Stars: the paradox at its most extreme
======================================

One hub, n-1 leaves.  Almost everyone's neighbour is the hub, so the
average neighbour degree races ahead of the average degree.
"""

from paradoxlab import (RandomGraphSpec, generate, compare_averages,
                        exact_degree_stats, paradox_report)

print(" n   mu      mu_bar   mu_tilde   slack")
for n in range(3, 13):
    star = generate(RandomGraphSpec(model="star", n=n))
    mu, mu_bar, mu_tilde = exact_degree_stats(star)
    # closed forms: mu_tilde = n/2, mu_bar = (1 + (n-1)^2) / n
    print(f"{n:2d}  {float(mu):6.3f}  {float(mu_bar):7.3f} "
          f" {float(mu_tilde):8.3f}  {float(mu_bar - mu):6.3f}")

# The decomposition mu_bar - mu_tilde = sum_j r_j (a_j/n - b_j) shows
# where the gap lives: a_j sums reciprocal neighbour degrees, b_j is
# the edge-sampling weight.
star5 = generate(RandomGraphSpec(model="star", n=5))
deco = compare_averages(star5, star5.degree_seq.astype(float))
print("\nstar n=5 decomposition")
print("a:", deco.a.tolist())
print("b:", deco.b.tolist())
print("lhs = mu_bar - mu_tilde =", deco.lhs)
print("rhs = sum r_j (a_j/n - b_j) =", deco.rhs)

# Per-node bias: the hub is the one node whose friends are beneath it.
report = paradox_report(star5, star5.degree_seq.astype(float))
print("delta (hub first):", report.delta.tolist())
