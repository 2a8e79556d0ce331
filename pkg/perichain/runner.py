"""
    Author: perichain contributors
    Date: 2026.10
"""

import argparse
import os
import sys
import time
from typing import Dict, List, Tuple

from pathos.multiprocessing import ProcessingPool

from perichain import PerichainError, WindowError
from perichain.lattice.alcove import Window
from perichain.lattice.rootdata import GlpWeight, HighestWeightData, dual_data, is_partition
from perichain.module.periodic import canonical_basis
from perichain.module.quotient import DEFAULT_TRI_DIRECTION, tensor_canonical_basis
from perichain.verifier.abs import count_statuses
from perichain.verifier.comparison import pin_tri_direction
from perichain.utilbox.import_util import import_class, parse_path_args
from perichain.utilbox.log_util import elapsed_summary, has_console, logger_stdout_file
from perichain.utilbox.md_util import save_md_report
from perichain.utilbox.report_util import FORMATS, serialize
from perichain.utilbox.type_util import str2bool, str2glp_weight, str2none, str2tuple
from perichain.utilbox.yaml_util import load_yaml

COMMANDS = ("periodic_cb", "tensor_cb", "verify")
SUITES = {
    "comparison": "perichain.verifier.comparison.BasisComparisonVerifier",
    "cyclic": "perichain.verifier.cyclic.CyclicVectorVerifier",
    "induced": "perichain.verifier.induced.InducedModuleVerifier",
    "aperiodic": "perichain.verifier.aperiodic.AperiodicVerifier",
    "orders": "perichain.verifier.orders.OrderComparisonVerifier",
    "relations": "perichain.verifier.relations.RelationsVerifier",
}
# the suites that compare with the tensor side need p > d, the matrix claim needs p >= d
STRICT_SUITES = ("comparison", "cyclic")
EXTENSIONS = dict(json="json", csv="csv", latex="tex")


class Runner(object):
    """
    Runner is the entrance of this toolkit. It reads one run configuration, computes a canonical basis table or runs
    verification suites on it, and writes the result as JSON, CSV or LaTeX.

    Every function is a classmethod, so that a customized runner only needs to override the steps it changes.
    add_parse() is the interface for extra arguments.

    Exit codes:
        0: success, no mismatch
        1: invalid input, hard failure or a mismatch
        2: uncovered window, or unverified rows when --require_coverage is set
    """

    @classmethod
    def add_parse(cls, parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
        """
        The interface where users can add their own arguments.

        Args:
            parser: argparse.ArgumentParser
                The name space where you want to add your arguments.

        Returns:
            parser: argparse.ArgumentParser
                The name space containing your arguments.

        """
        return parser

    @classmethod
    def parse(cls, argv: List[str] = None) -> argparse.Namespace:
        parser = argparse.ArgumentParser()

        # All-in-one configuration setting
        parser.add_argument(
            "--config",
            type=str2none,
            default=None,
            help="The path of the all-in-one run configuration file. The arguments given in the command line have "
            "priority over the ones in this file. (default: None)",
        )

        group = parser.add_argument_group("Group 1: Instance")
        group.add_argument("--d", type=int, default=None,
                           help="The degree d. Optional, it is checked against the sum of --c. (default: None)")
        group.add_argument("--p", type=int, default=None, help="The rank p of gl_p. (default: None)")
        group.add_argument("--c", type=str2tuple, default=None,
                           help="The partition c of d as a comma list, e.g. '2,1'. (default: None)")
        group.add_argument("--mu", type=str2glp_weight, default=None,
                           help="The weight mu~ as the comma list (e_1, ..., e_p) for tensor_cb. (default: None)")

        group = parser.add_argument_group("Group 2: Window")
        group.add_argument("--window", type=int, default=1,
                           help="The radius R of the window {g_n(A'_+ . w) : |n|_inf <= R}. (default: 1)")
        group.add_argument("--offset_bound", type=int, default=None,
                           help="The offset bound B of the matrix enumeration; None means d * p. (default: None)")
        group.add_argument("--search_radius", type=int, default=1,
                           help="The translation radius of the periodic canonical basis search. (default: 1)")
        group.add_argument("--require_coverage", type=str2bool, default=False,
                           help="Whether unverified rows or indeterminate findings give exit code 2. (default: False)")

        group = parser.add_argument_group("Group 3: Computation")
        group.add_argument("--command", type=str, default="verify", choices=COMMANDS,
                           help="What to compute. (default: verify)")
        group.add_argument("--suite", type=str, default="all", choices=tuple(SUITES) + ("all",),
                           help="The verification suite for --command verify. (default: all)")
        group.add_argument("--tri_direction", type=str, default=DEFAULT_TRI_DIRECTION, choices=("auto", "pos", "neg"),
                           help="The side of the lattice for the tensor canonical basis; 'auto' pins it on a small "
                           f"instance first. (default: {DEFAULT_TRI_DIRECTION})")
        group.add_argument("--family_word_length", type=int, default=4,
                           help="The word length of the bar-fixed family on the tensor side. (default: 4)")
        group.add_argument("--family_cap", type=int, default=400,
                           help="The maximal size of the bar-fixed family on the tensor side. (default: 400)")
        group.add_argument("--suite_conf", type=str2none, default=None,
                           help="Per-suite keyword arguments {suite: {key: value}}. Only readable from --config.")
        group.add_argument("--ncpu", type=int, default=1,
                           help="The number of processes the suites are distributed to. (default: 1)")

        group = parser.add_argument_group("Group 4: Output")
        group.add_argument("--format", type=str, default="json", choices=FORMATS,
                           help="The output format. (default: json)")
        group.add_argument("--output_path", type=str2none, default=None,
                           help="The folder of the result files. The result goes to stdout if not given. "
                           "(default: None)")
        group.add_argument("--log_path", type=str2none, default=None,
                           help="The folder of the log file. No log file is written if not given. (default: None)")
        group.add_argument("--console", type=str2bool, default=True,
                           help="Whether the log and the progress bars are shown on the terminal. (default: True)")

        parser = cls.add_parse(parser)
        return parser.parse_args(argv)

    # --- configuration --- #
    @classmethod
    def build_data(cls, args: argparse.Namespace) -> HighestWeightData:
        assert args.p is not None and args.c is not None, "Both --p and --c must be given!"
        c = tuple(args.c)
        assert all(isinstance(x, int) and x > 0 for x in c) and is_partition(c), f"c={c} is not a partition!"
        data = dual_data(args.p, c)
        assert args.d is None or args.d == data.d, f"d={args.d} does not match the partition c={c} of {data.d}!"
        return data

    @classmethod
    def build_mu(cls, mu) -> GlpWeight:
        if mu is None or isinstance(mu, GlpWeight):
            return mu
        if isinstance(mu, str):
            return str2glp_weight(mu)
        return GlpWeight(tuple(mu), 0)

    @classmethod
    def meta(cls, args: argparse.Namespace) -> Dict:
        mu = cls.build_mu(args.mu)
        return dict(
            command=args.command, suite=args.suite, d=args.d, p=args.p, c=None if args.c is None else list(args.c),
            mu=None if mu is None else list(mu.finite_part), window=args.window, offset_bound=args.offset_bound,
            search_radius=args.search_radius, tri_direction=args.tri_direction,
            family_word_length=args.family_word_length, family_cap=args.family_cap,
        )

    # --- commands --- #
    @classmethod
    def cmd_periodic_cb(cls, args: argparse.Namespace, data: HighestWeightData, logger) -> Tuple[List[Dict], int]:
        table = canonical_basis(data, Window(args.window), args.search_radius, show_progress=has_console(logger))
        rows = table.to_records()
        unverified = len(rows) - len(table.verified())
        logger.info(f"{len(rows)} entries A_<= in the window of radius {args.window}, {unverified} unverified.")
        return rows, 2 if unverified and args.require_coverage else 0

    @classmethod
    def cmd_tensor_cb(cls, args: argparse.Namespace, data: HighestWeightData, logger) -> Tuple[List[Dict], int]:
        mu = cls.build_mu(args.mu)
        assert mu is not None, "tensor_cb needs the weight --mu!"
        direction = args.tri_direction
        if direction == "auto":
            direction = pin_tri_direction(family_word_length=args.family_word_length, family_cap=args.family_cap)
        table = tensor_canonical_basis(data, mu, Window(args.window), direction,
                                       family_word_length=args.family_word_length, family_cap=args.family_cap,
                                       show_progress=has_console(logger))
        rows = table.to_records()
        unverified = len(rows) - len(table.verified())
        logger.info(f"{len(rows)} entries F(t) of weight {mu}, {unverified} unverified, "
                    f"{len(table.uncovered)} leading no vector of the bar-fixed family span.")
        return rows, 2 if unverified and args.require_coverage else 0

    @classmethod
    def suite_conf(cls, args: argparse.Namespace, name: str) -> Dict:
        conf = dict((args.suite_conf or {}).get(name, {}) or {})
        if name == "comparison":
            conf.setdefault("tri_direction", args.tri_direction)
            conf.setdefault("search_radius", args.search_radius)
        if name in ("comparison", "cyclic"):
            conf.setdefault("family_word_length", args.family_word_length)
            conf.setdefault("family_cap", args.family_cap)
        if name == "aperiodic":
            conf.setdefault("offset_bound", args.offset_bound)
        return conf

    @classmethod
    def run_suite(cls, name: str, args: argparse.Namespace, data: HighestWeightData) -> List[Dict]:
        verifier = import_class(SUITES[name])(**cls.suite_conf(args, name))
        return verifier(data=data, win=Window(args.window), p=data.p, d=data.d)

    @classmethod
    def cmd_verify(cls, args: argparse.Namespace, data: HighestWeightData, logger) -> Tuple[List[Dict], int]:
        names = list(SUITES) if args.suite == "all" else [args.suite]
        runnable = []
        for name in names:
            if name in STRICT_SUITES and data.p <= data.d:
                logger.warning(f"Suite {name} needs p > d and is skipped for p={data.p}, d={data.d}.")
            elif name == "aperiodic" and data.p < data.d:
                logger.warning(f"Suite {name} needs p >= d and is skipped for p={data.p}, d={data.d}.")
            else:
                runnable.append(name)

        if args.ncpu > 1 and len(runnable) > 1:
            pool = ProcessingPool(min(args.ncpu, len(runnable)))
            reports = pool.map(lambda name: cls.run_suite(name, args, data), runnable)
        else:
            reports = [cls.run_suite(name, args, data) for name in runnable]

        rows = []
        for name, report in zip(runnable, reports):
            logger.info(f"Suite {name}: {count_statuses(report)}")
            rows.extend(report)
        counts = count_statuses(rows)
        if counts["mismatch"]:
            return rows, 1
        return rows, 2 if counts["indeterminate"] and args.require_coverage else 0

    # --- entrance --- #
    @classmethod
    def write_output(cls, args: argparse.Namespace, payload: Dict, logger):
        text = serialize(payload, args.format)
        if args.output_path is None:
            sys.stdout.write(text + "\n")
            return
        os.makedirs(args.output_path, exist_ok=True)
        result_path = os.path.join(args.output_path, f"{args.command}.{EXTENSIONS[args.format]}")
        with open(result_path, mode="w", encoding="utf-8") as f:
            f.write(text + "\n")
        logger.info(f"The result has been saved to {result_path}.")
        if args.command == "verify":
            logger.info(f"The summary has been saved to {save_md_report(payload['rows'], args.output_path)}.")

    @classmethod
    def main(cls, args: argparse.Namespace) -> int:
        # the result itself goes to stdout when no output folder is given, so the log stays off the terminal then
        logger = logger_stdout_file(args.log_path, "perichain", console=args.console and args.output_path is not None)
        logger.info(f"Run configuration: {cls.meta(args)}")
        step_times = {}
        start = time.time()
        try:
            data = cls.build_data(args)
            step_times["configuration"] = time.time() - start
            command = getattr(cls, f"cmd_{args.command}")
            rows, code = command(args, data, logger)
            step_times[args.command] = time.time() - start - step_times["configuration"]
        except WindowError as e:
            logger.error(f"The window is not covered: {e} (uncovered: {e.uncovered[:5]})")
            return 2
        except (AssertionError, PerichainError) as e:
            logger.error(f"{type(e).__name__}: {e}")
            return 1

        cls.write_output(args, dict(meta=cls.meta(args), rows=rows), logger)
        logger.info(f"Finished with exit code {code}. Time spent:\n{elapsed_summary(step_times)}")
        return code

    @classmethod
    def run(cls, argv: List[str] = None) -> int:
        """
        The preparation area of Runner where the configuration is parsed and converted into code-friendly format.
        """
        argv = sys.argv[1:] if argv is None else argv
        args = cls.parse(argv)

        # the arguments given in the command line should not be refreshed by the argument '--config'
        given_args = [arg[2:].split("=")[0] for arg in argv if arg.startswith("--")]
        if args.config is not None:
            args.config = parse_path_args(args.config)
            config = load_yaml(args.config)
            for key, value in config.items():
                assert hasattr(args, key), f"Unknown argument {key} in {args.config}!"
                if key not in given_args:
                    setattr(args, key, value)

        if args.output_path is not None:
            args.output_path = parse_path_args(args.output_path)
        if args.log_path is not None:
            args.log_path = parse_path_args(args.log_path)
        return cls.main(args)


if __name__ == "__main__":
    sys.exit(Runner.run())
