"""Command-line front end.

Subcommands: ``noise-free``, ``channel``, ``threshold``, ``baseline`` and
``crosscheck``.  CSV is written with 17 significant digits, ``,`` separators
and ``\\n`` line endings so identical flags give byte-identical files.

Exit status: 0 success, 1 output path not writable, 2 usage error,
3 numerical failure.
"""
import argparse
import math
import os
import sys

from . import experiments, plotscripts
from .core import baseline_grover, optimal_iterations
from .errors import NumericalFailure

EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

NOISE_FREE_HEADER = (
    "c", "alpha_sq", "prob_00", "prob_01", "prob_10", "prob_11",
    "raw_amp_00", "raw_amp_01", "raw_amp_10", "raw_amp_11",
)
CHANNEL_HEADER = (
    "alpha_sq", "p", "channel", "concurrence", "discord", "discord_half", "discord_quarter",
    "prob_00", "prob_01", "prob_10", "prob_11",
)
# Unnormalized amplitude scale used by the noise-free figure.
RAW_AMPLITUDE_SCALE = 8.0


def fmt(value):
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    return format(float(value) + 0.0, ".17g")


def render_csv(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


class OutputError(Exception):
    pass


def check_writable(path):
    if path is None:
        return
    target = os.path.abspath(path)
    parent = os.path.dirname(target)
    if os.path.isdir(target):
        raise OutputError("%s is a directory" % path)
    if os.path.exists(target):
        if not os.access(target, os.W_OK):
            raise OutputError("%s is not writable" % path)
    elif not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        raise OutputError("cannot create %s" % path)


def write_output(path, text):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _steps(value):
    n = int(value)
    if n < 2:
        raise argparse.ArgumentTypeError("step count must be at least 2")
    return n


def _positive_int(value):
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _nonnegative_int(value):
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _positive_float(value):
    x = float(value)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _qubits(value):
    n = int(value)
    if not 1 <= n <= 12:
        raise argparse.ArgumentTypeError("qubit count must be in 1..12")
    return n


def build_parser():
    parser = argparse.ArgumentParser(
        prog="noisygrover",
        description="Generalized two-qubit Grover search with damping noise.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    def add_out(p, plot=True):
        p.add_argument("--out", metavar="PATH", help="CSV output file (default: standard output)")
        if plot:
            p.add_argument("--emit-plot", action="store_true",
                           help="also write PATH-stem.plot.py, a matplotlib script for the figure")

    def add_marked(p):
        p.add_argument("--marked", type=int, choices=range(4), default=1, metavar="{0,1,2,3}",
                       help="index of the marked basis state (default: 1, i.e. |01>)")

    p = sub.add_parser("noise-free", help="noise-free iterate swept over concurrence")
    p.add_argument("--c-steps", type=_steps, default=101, help="grid points on c in [0, 1] (default: 101)")
    add_marked(p)
    add_out(p)

    p = sub.add_parser("channel", help="damping channel after the oracle, swept over alpha^2 and p")
    p.add_argument("--kind", choices=("amplitude", "phase"), default="amplitude",
                   help="damping channel (default: amplitude)")
    p.add_argument("--alpha-steps", type=_steps, default=51, help="grid points on alpha^2 (default: 51)")
    p.add_argument("--p-steps", type=_steps, default=51, help="grid points on p (default: 51)")
    p.add_argument("--target", choices=("first", "second"), default="second",
                   help="qubit the channel acts on (default: second)")
    p.add_argument("--discord-norm", choices=("paper", "quarter"), default="paper",
                   help="normalization reported in the 'discord' column: 1/2 or 1/4 (default: paper)")
    add_marked(p)
    add_out(p)

    p = sub.add_parser("threshold", help="concurrence beyond which the solution is most likely")
    p.add_argument("--tol", type=_positive_float, default=1e-6, help="bisection bracket width (default: 1e-6)")
    add_marked(p)
    add_out(p, plot=False)

    p = sub.add_parser("baseline", help="textbook n-qubit Grover statevector simulation")
    p.add_argument("--qubits", type=_qubits, default=2, help="number of qubits, 1..12 (default: 2)")
    p.add_argument("--iterations", type=_nonnegative_int, default=None,
                   help="Grover iterations (default: round(pi sqrt(N) / 4))")
    p.add_argument("--marked", type=_nonnegative_int, default=1, help="marked index < 2^qubits (default: 1)")
    add_out(p, plot=False)

    p = sub.add_parser("crosscheck", help="audit transcribed closed forms against direct computation")
    p.add_argument("--samples", type=_positive_int, default=1000, help="pseudo-random (alpha^2, p) points")
    p.add_argument("--seed", type=int, default=42, help="seed for Python's random.Random (default: 42)")
    add_out(p, plot=False)
    return parser


def run_noise_free(args):
    records = experiments.sweep_noise_free(args.c_steps, args.marked)
    rows = []
    for rec in records:
        probs = rec.probabilities
        raw = [RAW_AMPLITUDE_SCALE * math.sqrt(v) for v in probs]
        rows.append((rec.c, rec.alpha_sq, *probs, *raw))
    write_output(args.out, render_csv(NOISE_FREE_HEADER, rows))
    return "noise-free"


def run_channel(args):
    records = experiments.sweep_channel(args.kind, args.alpha_steps, args.p_steps, args.target, args.marked)
    rows = []
    for rec in records:
        primary = rec.discord_half if args.discord_norm == "paper" else rec.discord_quarter
        rows.append((rec.alpha_sq, rec.p, rec.channel, rec.concurrence, primary,
                     rec.discord_half, rec.discord_quarter, *rec.probabilities))
    write_output(args.out, render_csv(CHANNEL_HEADER, rows))
    return "channel-" + args.kind


def run_threshold(args):
    c_star = experiments.find_threshold(args.tol, args.marked)
    print("c_star=%s" % fmt(c_star))
    if args.out is not None:
        write_output(args.out, render_csv(("tolerance", "c_star"), [(args.tol, c_star)]))


def run_baseline(args):
    size = 1 << args.qubits
    if args.marked >= size:
        raise ValueError("marked index %d out of range for %d qubits" % (args.marked, args.qubits))
    iterations = optimal_iterations(args.qubits) if args.iterations is None else args.iterations
    history = [(k, baseline_grover(args.qubits, args.marked, k)) for k in range(iterations + 1)]
    print("success_probability=%s iterations=%d" % (fmt(history[-1][1]), iterations))
    if args.out is not None:
        write_output(args.out, render_csv(("iteration", "success_probability"), history))


def run_crosscheck(args):
    rows = experiments.crosscheck_printed_forms(args.samples, args.seed)
    summary = experiments.summarize_crosscheck(rows)
    print("# formula_id  max_abs_deviation  rows  verdict (tolerance %g)" % experiments.AGREEMENT_TOL)
    for fid, (worst, n) in summary.items():
        verdict = "agrees" if worst <= experiments.AGREEMENT_TOL else "DEVIATES"
        print("%-20s %.6e %6d %s" % (fid, worst, n, verdict))
    if args.out is not None:
        table = [(r.formula_id, r.alpha_sq, r.p, r.computed, r.printed, r.abs_deviation) for r in rows]
        write_output(args.out, render_csv(experiments.CROSSCHECK_COLUMNS, table))


RUNNERS = {
    "noise-free": run_noise_free,
    "channel": run_channel,
    "threshold": run_threshold,
    "baseline": run_baseline,
    "crosscheck": run_crosscheck,
}


def run(args):
    """Execute a parsed configuration and return the exit status."""
    try:
        check_writable(args.out)
        if getattr(args, "emit_plot", False):
            if args.out is None:
                print("error: --emit-plot requires --out", file=sys.stderr)
                return EXIT_USAGE
            check_writable(plotscripts.script_path(args.out))
    except OutputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_IO
    try:
        figure = RUNNERS[args.subcommand](args)
    except NumericalFailure as exc:
        print("numerical failure: %s" % exc, file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_IO
    if getattr(args, "emit_plot", False) and figure is not None:
        write_output(plotscripts.script_path(args.out), plotscripts.render(figure, args.out))
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
