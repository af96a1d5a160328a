"""Per-subcarrier achievable rate when the band straddles the guide cutoff.

The reference system centers 64 subcarriers spanning 2 GHz on 15.5 GHz, so
the lowest quarter of the band falls below the 15 GHz cutoff and radiates
nothing.  Comparing three channel models separates the loss mechanisms:

  practical               full dispersive model
  ideal_phase_matched     perfect pinch matching, guide dispersion kept
  freq_independent_fmax   every subcarrier frozen at the top-band response

The flat model is exactly constant across the band; the dispersive models
show the cutoff wall and a rate slope across the propagating subcarriers.
"""

import dataclasses

import numpy as np

from pinchsim import ModelVariant, evaluate, subcarrier_rates
from pinchsim.scenario import PRESETS, scenario_from_config


def main() -> None:
    scenario = scenario_from_config(PRESETS["fig2"])
    f = scenario.grid.frequencies()

    rates = {
        variant: subcarrier_rates(dataclasses.replace(scenario, variant=variant))
        for variant in ModelVariant
    }

    print("subcarrier   f [GHz]   practical   ideal   flat-at-fmax")
    for p in (1, 8, 16, 17, 24, 32, 48, 64):
        row = [rates[v][p - 1] for v in ModelVariant]
        print(
            f"  {p:>8}   {f[p - 1] / 1e9:7.3f}   {row[0]:9.3f}   {row[1]:5.2f}"
            f"   {row[2]:12.2f}"
        )
    print()

    response = evaluate(scenario)
    propagating = int(np.count_nonzero(response.propagating))
    print(f"propagating subcarriers: {propagating} of {f.size}")
    for variant in ModelVariant:
        print(f"  sum of rates, {variant.value:<22}: {rates[variant].sum():8.1f} bits")
    print()
    print("the practical profile rises with frequency: subcarriers near cutoff")
    print("suffer both a weaker pinch exchange and the dispersive guide, while")
    print("the top of the band approaches the ideal envelope.")


if __name__ == "__main__":
    main()
