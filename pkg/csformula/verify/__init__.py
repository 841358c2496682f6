from csformula.verify.sweeps import CHECKS, SweepOptions, VerificationReport, run_all, run_check

__all__ = ["CHECKS", "SweepOptions", "VerificationReport", "run_all", "run_check"]
