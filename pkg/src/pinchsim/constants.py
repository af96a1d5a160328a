"""Physical constants (SI)."""

# CODATA speed of light in vacuum, m/s.
C_VACUUM = 2.99792458e8

# Rounded value used by many textbook link budgets; with a 1 cm guide it puts
# the TE10 cutoff at exactly 15 GHz.  Scenario presets select this one.
C_ROUNDED = 3.0e8
