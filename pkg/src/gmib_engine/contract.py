"""Closed-form contract quantities for a GMIB variable annuity.

Everything in this module is a pure function of its arguments: annuity
present-value factors, the guaranteed benefit base, and the two annual fee
schedules that can be attached to the investment account.  Safe to call from
any number of concurrent workers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class FeeStructure(enum.Enum):
    """Which annual fee schedule the contract charges."""

    F1 = "f1"  # fixed percentage of the rolled-up premium
    F2 = "f2"  # F1 additionally scaled by payment_rate * annuity factor


class AnnuityTiming(enum.Enum):
    """Timing of the first payment relative to the annuity valuation date."""

    DUE = "due"  # first payment on the valuation date itself
    IMMEDIATE = "immediate"  # first payment one year later


@dataclass(frozen=True)
class ContractTerms:
    """Policy-level terms of the variable annuity and its GMIB rider.

    Attributes
    ----------
    premium : float
        Single upfront premium invested at inception (currency, > 0).
    horizon_years : int
        Accumulation period in whole years (>= 1).
    roll_up_rate : float
        Annual roll-up applied to the guaranteed base (fraction, >= 0).
    payment_rate : float
        Guaranteed annual payment rate converting the rolled-up premium
        into income (fraction, >= 0; zero collapses the guarantee).
    fee_rate : float
        Annual fee rate, as a fraction of the rolled-up premium (>= 0).
    fee_structure : FeeStructure
        F1 charges ``fee_rate * premium * (1 + roll_up_rate)^n`` in year n;
        F2 multiplies that by ``payment_rate`` and the annuity factor.
    annuity_term : int
        Number of annual income payments (default 20).
    annuity_timing : AnnuityTiming
        First income payment at the annuitization date (DUE, the default)
        or one year after (IMMEDIATE).
    """

    premium: float
    horizon_years: int
    roll_up_rate: float
    payment_rate: float
    fee_rate: float
    fee_structure: FeeStructure = FeeStructure.F1
    annuity_term: int = 20
    annuity_timing: AnnuityTiming = AnnuityTiming.DUE

    def __post_init__(self) -> None:
        if not (math.isfinite(self.premium) and self.premium > 0):
            raise ValueError(f"premium must be positive, got {self.premium}")
        if self.horizon_years < 1:
            raise ValueError(f"horizon_years must be >= 1, got {self.horizon_years}")
        if self.annuity_term < 1:
            raise ValueError(f"annuity_term must be >= 1, got {self.annuity_term}")
        for name in ("roll_up_rate", "payment_rate", "fee_rate"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and non-negative, got {value}")


@dataclass(frozen=True)
class MarketModel:
    """Risk-neutral dynamics of the fee-free investment account.

    ``rate`` is the continuously compounded growth rate of the account;
    ``volatility`` the annualized lognormal volatility.
    """

    rate: float
    volatility: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.rate):
            raise ValueError(f"rate must be finite, got {self.rate}")
        if not math.isfinite(self.volatility) or self.volatility < 0:
            raise ValueError(f"volatility must be >= 0, got {self.volatility}")


def annuity_factor(
    rate: float,
    n_payments: int,
    timing: AnnuityTiming = AnnuityTiming.DUE,
) -> float:
    """Present value of ``n_payments`` annual payments of 1.

    The value is as of the first payment-period boundary: under DUE the
    first payment falls on the valuation date, under IMMEDIATE one year
    later.  Computed by direct summation of the discount factors so that a
    zero rate needs no special-casing.

    Raises
    ------
    ValueError
        If ``rate <= -1`` (discount factors undefined) or ``n_payments < 1``.
    """
    if n_payments < 1:
        raise ValueError(f"n_payments must be >= 1, got {n_payments}")
    if rate <= -1.0:
        raise ValueError(f"rate must exceed -1, got {rate}")
    first = 0 if timing is AnnuityTiming.DUE else 1
    return sum((1.0 + rate) ** -k for k in range(first, first + n_payments))


def benefit_base(terms: ContractTerms, valuation_rate: float, t: int) -> float:
    """Guaranteed benefit base at time ``t``.

    The premium rolled up at ``roll_up_rate`` for ``t`` years, converted to
    income at ``payment_rate`` and valued with the annuity factor at
    ``valuation_rate``.  Deterministic.
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    factor = annuity_factor(valuation_rate, terms.annuity_term, terms.annuity_timing)
    return terms.premium * (1.0 + terms.roll_up_rate) ** t * terms.payment_rate * factor


def fee_amount(terms: ContractTerms, valuation_rate: float, year: int) -> float:
    """Annual fee withdrawn from the investment account at the end of ``year``.

    ``year`` runs 1..horizon_years.  Under F2 the annuity factor is evaluated
    at ``valuation_rate``; in a constant-rate world that rate is the contract
    rate, making the F2/F1 ratio a constant ``payment_rate * annuity_factor``.
    """
    if not 1 <= year <= terms.horizon_years:
        raise ValueError(
            f"year must be in 1..{terms.horizon_years}, got {year}"
        )
    return _fee_amount_unbounded(terms, valuation_rate, year)


def _fee_amount_unbounded(terms: ContractTerms, valuation_rate: float, year: int) -> float:
    # Continues the schedule past the contract horizon; deferral years use this.
    fee = terms.fee_rate * terms.premium * (1.0 + terms.roll_up_rate) ** year
    if terms.fee_structure is FeeStructure.F2:
        fee *= terms.payment_rate * annuity_factor(
            valuation_rate, terms.annuity_term, terms.annuity_timing
        )
    return fee
