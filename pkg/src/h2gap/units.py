"""Unit conventions and the hydrogen production <-> electrolysis capacity conversion.

Conventions used throughout the package:

* capacity        -- GW of *electrical input* of the electrolyser
* energy prices   -- US$(2023) per MWh
* investment      -- US$(2023) per kW(el)
* hydrogen output -- Mt H2 per year, valued at the lower heating value
* money           -- US$(2023), billions for reporting

All currency values are nominal 2023 US$; there is no inflation or
exchange-rate handling anywhere in the package.
"""

LHV_KWH_PER_KG = 33.33
"""Lower heating value of hydrogen in kWh per kg (as-printed two decimals)."""

HOURS_PER_YEAR = 8760.0


def _check_flh_eta(full_load_hours: float, efficiency: float) -> None:
    if not 0.0 < full_load_hours <= HOURS_PER_YEAR:
        raise ValueError(f"full_load_hours must be in (0, 8760], got {full_load_hours}")
    if not 0.0 < efficiency <= 1.0:
        raise ValueError(f"efficiency must be in (0, 1], got {efficiency}")


def production_to_capacity(mass_mt_per_yr: float, full_load_hours: float,
                           efficiency: float) -> float:
    """Electrolyser input capacity (GW) needed for a hydrogen output.

    Parameters
    ----------
    mass_mt_per_yr : hydrogen production in Mt per year (LHV basis)
    full_load_hours : equivalent full-load hours per year, in (0, 8760]
    efficiency : electrolyser efficiency (LHV), in (0, 1]

    Returns
    -------
    Electrical input capacity in GW:
    ``mass * LHV / (full_load_hours * efficiency)``.
    """
    _check_flh_eta(full_load_hours, efficiency)
    if mass_mt_per_yr < 0.0:
        raise ValueError(f"mass flow must be non-negative, got {mass_mt_per_yr}")
    # Mt/yr -> 1e9 kg/yr; kWh -> GW via 1e6 kW/GW
    return mass_mt_per_yr * LHV_KWH_PER_KG * 1e3 / (full_load_hours * efficiency)


def capacity_to_production(capacity_gw: float, full_load_hours: float,
                           efficiency: float) -> float:
    """Hydrogen output (Mt/yr, LHV) of an electrolyser input capacity in GW.

    Exact inverse of :func:`production_to_capacity`.
    """
    _check_flh_eta(full_load_hours, efficiency)
    if capacity_gw < 0.0:
        raise ValueError(f"capacity must be non-negative, got {capacity_gw}")
    return capacity_gw * full_load_hours * efficiency / (LHV_KWH_PER_KG * 1e3)
