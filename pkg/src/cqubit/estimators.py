"""scikit-learn transformers over the four-channel representation.

``CqubitEncoder`` maps a column of sample times to channel rows and
``GatePipeline`` maps channel rows through a gate sequence on either the
ideal gate algebra or the analog netlist backend, so both compose with
:class:`sklearn.pipeline.Pipeline`.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .gates import Hadamard, PauliX, RPhi, apply_pipeline, pipeline_matrix
from .netlist import build_gate_netlist, perturb_resistors
from .state import CHANNELS, ChannelQuadWave, CqubitParams, channel_array

BACKENDS = ("ideal", "netlist")


def check_channels(X) -> np.ndarray:
    """Validate an ``(n_samples, 4)`` float array of channel rows."""
    X = check_array(X, dtype=np.float64)
    if X.shape[1] != 4:
        raise ValueError(f"expected 4 channel columns, got {X.shape[1]}")
    return X


class CqubitEncoder(TransformerMixin, BaseEstimator):
    """Encode sample times as cqubit channel rows.

    Parameters
    ----------
    omega : float
        Angular frequency of the carrier in rad/s.
    varphi, alpha, beta : float
        Carrier initial phase and the phases of the |0> and |1> amplitudes.
    """

    def __init__(self, omega=2e9 * np.pi, varphi=0.0, alpha=0.0, beta=0.0):
        self.omega = omega
        self.varphi = varphi
        self.alpha = alpha
        self.beta = beta

    def fit(self, X=None, y=None):
        self.params_ = CqubitParams(self.omega, self.varphi, self.alpha, self.beta)
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "params_")
        t = np.asarray(X, dtype=np.float64)
        if t.ndim == 1:
            t = t[:, None]
        t = check_array(t, dtype=np.float64)
        if t.shape[1] != 1:
            raise ValueError(f"expected a single time column, got {t.shape[1]} columns")
        return channel_array(self.params_, t[:, 0])

    def get_feature_names_out(self, input_features=None):
        return np.asarray(CHANNELS, dtype=object)


class GatePipeline(TransformerMixin, BaseEstimator):
    """Apply a gate sequence (first gate acts first) to channel rows.

    Parameters
    ----------
    gates : sequence of gate ops
    backend : {"ideal", "netlist"}
        ``"ideal"`` uses the channel algebra; ``"netlist"`` evaluates one
        analog block netlist per gate.
    divider_r1 : float
        Series resistor of every divider, ohms.
    divider_r2 : float or None
        If set, shunt resistor used for every 1/sqrt(2) divider instead of
        the exact design value.
    resistor_tol_pct : float
        Uniform resistor tolerance in percent applied to netlist dividers.
    seed : int
        Seed for the resistor perturbation.
    """

    def __init__(
        self,
        gates=(),
        backend="ideal",
        divider_r1=10e3,
        divider_r2=None,
        resistor_tol_pct=0.0,
        seed=0,
    ):
        self.gates = gates
        self.backend = backend
        self.divider_r1 = divider_r1
        self.divider_r2 = divider_r2
        self.resistor_tol_pct = resistor_tol_pct
        self.seed = seed

    def fit(self, X=None, y=None):
        if self.backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        if self.resistor_tol_pct < 0:
            raise ValueError(f"resistor_tol_pct must be non-negative, got {self.resistor_tol_pct}")
        gates = tuple(self.gates)
        for gate in gates:
            if not isinstance(gate, (Hadamard, PauliX, RPhi)):
                raise TypeError(f"unknown gate {gate!r}")
        if X is not None:
            check_channels(X)
        self.gates_ = gates
        self.matrix_ = pipeline_matrix(gates)
        self.netlists_ = ()
        if self.backend == "netlist":
            seeds = np.random.SeedSequence(self.seed).spawn(len(gates))
            self.netlists_ = tuple(
                perturb_resistors(
                    build_gate_netlist(gate, self.divider_r1, self.divider_r2),
                    self.resistor_tol_pct,
                    child,
                )
                for gate, child in zip(gates, seeds)
            )
        self.n_features_in_ = 4
        return self

    def transform(self, X):
        check_is_fitted(self, "gates_")
        X = check_channels(X)
        if self.backend == "ideal":
            return apply_pipeline(X, self.gates_)
        for netlist in self.netlists_:
            X = netlist.evaluate(X)
        return X

    def __call__(self, wave: ChannelQuadWave) -> ChannelQuadWave:
        return wave.with_values(self.transform(wave.values))

    def get_feature_names_out(self, input_features=None):
        return np.asarray(CHANNELS, dtype=object)
