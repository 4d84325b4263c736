import logging
import sys
from typing import List, Optional, Tuple

from .canonical import CanonicalForm, canonical_form
from .config import RunConfig
from .derivation import SigmaDerivation, basis_d, der_bracket
from .exceptions import NoFreePartError
from .parser import parse_laurent
from .report import any_refuted
from .serializers import (
    Record,
    bracket_record,
    delta_record,
    raw_table_record,
    reduce_record,
    report_record,
    table_record,
)
from .suites import SuiteRunner
from .twist import TwistContext


class QWittKernel:
    """Owns the run configuration, the logger and one twist context per requested s"""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig.reload_config()

        self.logger = self._setup_logger()
        self.contexts = [TwistContext.create(s, self.config.q_value) for s in self.config.s_values]
        self.logger.info(f"Kernel ready for s={list(self.config.s_values)}, q={self.config.qmode}")

    def _setup_logger(self) -> logging.Logger:
        """Setup logger configuration"""
        logger = logging.getLogger("QWitt")
        logger.setLevel(self.config.log_level)
        logger.propagate = False

        if not logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            formatter = logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
            handler.setFormatter(formatter)
            logger.addHandler(handler)

        return logger

    @property
    def ctx(self) -> TwistContext:
        """The first context; single-s commands use only this one"""
        return self.contexts[0]

    def delta(self) -> Record:
        return delta_record(self.ctx)

    def bracket(self, n: int, m: int) -> Record:
        bracket = der_bracket(basis_d(self.ctx, n), basis_d(self.ctx, m))
        form = canonical_form(bracket) if self.ctx.d >= 1 else None
        return bracket_record(self.ctx, n, m, bracket, form)

    def reduce(self, text: str) -> Record:
        coeff = parse_laurent(text, self.ctx.q)
        return reduce_record(self.ctx, text, canonical_form(SigmaDerivation(self.ctx, coeff)))

    def table(self, index_range: Optional[Tuple[int, int]] = None, mod_inner: bool = False) -> Record:
        """Bracket [d_n, d_m] for every n, m in the range, reduced modulo Inn when mod_inner"""
        if mod_inner and self.ctx.d == 0:
            raise NoFreePartError()
        lo, hi = index_range or self.config.window
        brackets = [
            (n, m, der_bracket(basis_d(self.ctx, n), basis_d(self.ctx, m)))
            for n in range(lo, hi + 1)
            for m in range(lo, hi + 1)
        ]
        if not mod_inner:
            self.logger.info(f"Computed {len(brackets)} brackets for s={self.ctx.s}")
            return raw_table_record(self.ctx, brackets)
        rows: List[Tuple[int, int, CanonicalForm]] = [(n, m, canonical_form(b)) for n, m, b in brackets]
        self.logger.info(f"Reduced {len(rows)} brackets for s={self.ctx.s}")
        return table_record(self.ctx, rows)

    async def verify(self) -> Tuple[int, Record]:
        """Exit status (0 ok, 1 some claim refuted) and the claim report"""
        results = await SuiteRunner(self.config, self.contexts).run_all()
        claims_by_s = [(ctx.s, [c for r in results if r["s"] == ctx.s for c in r["claims"]]) for ctx in self.contexts]
        report = report_record(self.contexts, claims_by_s)
        return (1 if any_refuted(report["claims"]) else 0), report
