"""Where to pinch: centering a minimally-spaced array on the user.

With the coupling cascade fixed, antenna placement only moves the free-space
factors, and maximizing the summed path gain favors putting every antenna as
close to the user's foot point as the minimum spacing allows.  The resulting
rule -- a uniformly spaced array centered on the user's x coordinate -- is
provably optimal whenever the transverse offset dominates the array span
(the unimodality condition), and a brute-force scan confirms it.
"""

import numpy as np

from pinchsim import PlacementRule, UserGeometry, WaveguideSpec
from pinchsim.placement import (
    approx_locations,
    geometric_path_gain,
    unimodality_check,
)


def main() -> None:
    wg = WaveguideSpec(width_a=0.01, total_length=20.0)
    user = UserGeometry(position=(5.0, 2.0, 0.0), waveguide_height=5.0)
    rule = PlacementRule(count=8, min_spacing=0.2070796326794897, guard_gap=0.05)

    placed = approx_locations(rule, user.x, wg)
    positions = np.asarray(placed.positions)
    print(f"rule: {rule.count} antennas, spacing {rule.min_spacing:.4f} m")
    print("positions [m]: " + "  ".join(f"{x:.3f}" for x in positions))
    print(f"array center {positions.mean():.3f} m = user x {user.x:.3f} m")
    print()

    c_offset = user.y**2 + user.waveguide_height**2
    span_sq = ((rule.count - 1) * rule.min_spacing) ** 2
    print(
        f"unimodality condition: y^2 + h^2 = {c_offset:.1f} >= span^2 = {span_sq:.2f}"
        f" -> {unimodality_check(rule, user)}"
    )
    print()

    base = geometric_path_gain(placed, user)
    shifts = np.linspace(-1.0, 1.0, 2001)
    gains = np.array(
        [geometric_path_gain(positions + s, user) for s in shifts]
    )
    print(f"summed path gain at the rule placement: {base:.6f} 1/m")
    print(f"best over {shifts.size} shifted copies:  {gains.max():.6f} 1/m")
    print(f"shift achieving the best value: {shifts[gains.argmax()]:+.4f} m")
    print()
    print("off-center shifts only lose: the centered array is the optimum,")
    print("and it degrades smoothly (no local maxima to trap a search):")
    for s in (-1.0, -0.5, 0.0, 0.5, 1.0):
        value = geometric_path_gain(positions + s, user)
        print(f"  shift {s:+.1f} m -> {value:.6f} 1/m")


if __name__ == "__main__":
    main()
