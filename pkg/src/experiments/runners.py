import logging

import numpy as np

from src.config.kinds import ExperimentKind
from src.experiments.experiment import Experiment, ExperimentResult
from src.factories.shift_measure import ShiftMeasureFactory
from src.spectral.experiment import run_spectral_experiment
from src.stats.bs_stats import run_bs_experiment
from src.stats.poisson import circuit_poisson_test, stability_table
from src.unimodular.shift import reweight, sample_pointed_sequences, shift_mtp_check
from src.unimodular.transports import get_transport

logger = logging.getLogger('belyi-lab')


class BSExperiment(Experiment):
    """Decadimento di N_R / vol, crescita dei cusp e alberi locali"""
    kind = ExperimentKind.BS

    def _run(self) -> ExperimentResult:
        rows = run_bs_experiment(self.config.experiment, self.map_fn)
        for row in rows:
            if row.censored:
                logger.warning(f"n={row.n}: {row.censored} of {row.trials} trials censored by the walk budget")
        return ExperimentResult(success=True, kind=self.kind,
                                tables={"summary": [row.to_record() for row in rows]})


class PoissonExperiment(Experiment):
    kind = ExperimentKind.POISSON

    def _run(self) -> ExperimentResult:
        rows = circuit_poisson_test(self.config.experiment, self.map_fn)
        stability = stability_table(rows)
        for entry in stability:
            if not entry.within_rel_tol:
                logger.info(f"k={entry.k}: means at n={entry.n_small} and n={entry.n_large} differ by more than 10%")
        return ExperimentResult(success=True, kind=self.kind, tables={
            "circuits": [row.to_record() for row in rows],
            "stability": [entry.to_record() for entry in stability],
        })


class SpectralExperiment(Experiment):
    """Momenti e traccia del calore dei grafi cubici contro l'albero 3-regolare"""
    kind = ExperimentKind.SPECTRAL

    def _run(self) -> ExperimentResult:
        summary = run_spectral_experiment(self.config.experiment, self.config.spectral, self.map_fn)
        return ExperimentResult(
            success=True,
            kind=self.kind,
            tables={"moments": summary.moment_rows, "heat": summary.heat_rows()},
            payload={"weak_convergence_passed": summary.report.passed, "tol": summary.report.tol},
        )


class MTPExperiment(Experiment):
    """Trasporto di massa sulle finestre delle misure di shift e riscalamento per volume"""
    kind = ExperimentKind.MTP

    def _run(self) -> ExperimentResult:
        mtp = self.config.mtp
        seed = self.config.experiment.seed
        transport = get_transport(mtp.transport)
        blocks = ShiftMeasureFactory.create_blocks(mtp.blocks)
        reports = []
        for i, measure_config in enumerate(mtp.shift_measures):
            nu = ShiftMeasureFactory.create_measure(measure_config)
            law = reweight(nu, blocks)
            mtp_report = shift_mtp_check(nu, transport, mtp.window, mtp.samples, seed + i)
            pointed = sample_pointed_sequences(law, mtp.window, mtp.samples, seed + i)
            frequency = float(np.mean([p.word[mtp.window] for p in pointed]))
            entry = mtp_report.to_dict()
            entry.update({
                "label": measure_config.label,
                "kind": nu.kind,
                "marginal_one": str(nu.marginal_one()),
                "reweighted_marginal_one": str(law.p_one),
                "reweighted_marginal_one_float": float(law.p_one),
                "empirical_reweighted_one": frequency,
                "induced_from_lattice": nu.is_induced_from_lattice(),
            })
            reports.append(entry)
        payload = {
            "transport": transport.name,
            "blocks": {"vol0": blocks.vol0, "vol1": blocks.vol1},
            "window": mtp.window,
            "samples": mtp.samples,
            "measures": reports,
        }
        return ExperimentResult(success=True, kind=self.kind, payload=payload)
