"""
Command line front end: compute surgeries, run the cone oracle and the
obstruction suites, enumerate candidate Alexander polynomials, recover the
Alexander polynomial of an L-space knot and regenerate the bundled
example outputs.

Exit status is 0 on success, 1 when a check fails or the oracle reports a
mismatch, and 2 for unreadable documents, invalid models or bad
arguments.
"""

import argparse
import logging
import os
import sys

from hf_surgery.floer import Slope, HFSurgeryError, SchemaError, InvalidModelError, \
    NotAnLSpaceKnotError, full_surgery, validate, knot_from_document, \
    manifold_from_document, manifold_to_document, render_table, torus_two_model
from hf_surgery.floer._constants import SCHEMA_KEY, SCHEMA_VERSION, KIND_KEY, \
    KIND_KNOT, KIND_MANIFOLD, FAIL
from hf_surgery.floer.floer_utils import format_rational
from hf_surgery.obstructions import c_invariant, slope_denominator_bound, \
    alternating_genus_bound, candidate_slopes, enumerate_alternating_alexander, \
    recover_alexander_lspace, run_obstructions, surgery_matches
from hf_surgery.oracle import compare, compare_all, oracle_trials
from hf_surgery.oracle.cone_oracle import DEFAULT_CHARACTERISTIC, DEFAULT_SEED
from hf_surgery.utils import load_document, load_defaults, dump_document, \
    dump_documents, example_path

logger = logging.getLogger(__name__)
logger.setLevel(level=logging.INFO)

COMPUTE_MODE = 'compute'
ORACLE_MODE = 'oracle'
OBSTRUCT_MODE = 'obstruct'
ENUMERATE_MODE = 'enumerate'
RECOVER_MODE = 'recover'
EXAMPLES_MODE = 'examples'

TABLE_FORMAT = 'table'
DOC_FORMAT = 'doc'

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2

# bundled knot -> slopes written by the examples command
EXAMPLE_SURGERIES = [
    ('unknot', ['7/3', '1', '-5']),
    ('trefoil', ['1', '3', '-1', '0']),
    ('T52', ['1', '5', '-3/2']),
    ('K0', ['-4', '4', '0']),
    ('K1', ['-4']),
    ('K2', ['-4']),
]
EXAMPLE_TORUS_P = [3, 5, 7, 9]


def _add_common(parser, input_help):
    parser.add_argument("--input",
                        help=input_help,
                        type=str,
                        action='append',
                        default=[])
    parser.add_argument("--format",
                        help="Human readable table or a machine readable YAML document.",
                        choices=[TABLE_FORMAT, DOC_FORMAT],
                        default=TABLE_FORMAT)
    parser.add_argument("--out",
                        help="File to write to; standard output when omitted.",
                        type=str,
                        default=None)
    parser.add_argument("--pool-size",
                        help="Size of the gevent pool used to fan out the work.",
                        type=int,
                        default=None)


def _add_slope(parser, required=False):
    parser.add_argument("--slope",
                        help="Surgery slope p/q, repeatable. Write negative "
                             "fractions as --slope=-2/3.",
                        type=Slope.parse,
                        action='append',
                        required=required,
                        default=None)


def get_args(argv=None):
    """
    Parse the arguments of the hf-surgery tool.
    """
    # Make parser object
    p = argparse.ArgumentParser(
        description="Heegaard Floer homology of rational surgeries on knots, "
                    "and the obstructions that follow from it.\n")
    p.add_argument("--config",
                   help="YAML file overriding the bundled defaults.",
                   type=str,
                   default=None)
    p.add_argument("--verbose",
                   help="Log at DEBUG level.",
                   action='store_true')
    sub_parsers = p.add_subparsers(help='sub-command help', dest='command')

    parser_compute = sub_parsers.add_parser(COMPUTE_MODE,
                                            help="HF^+ of the surgeries on a knot model.")
    _add_common(parser_compute, "The knot document.")
    _add_slope(parser_compute, required=True)
    parser_compute.add_argument("--spinc",
                                help="Only report this Spin^c label.",
                                type=int,
                                default=None)

    parser_oracle = sub_parsers.add_parser(ORACLE_MODE,
                                           help="Compare the closed form with the "
                                                "truncated mapping cone.")
    _add_common(parser_oracle, "The knot document; leave out with --trials.")
    _add_slope(parser_oracle)
    parser_oracle.add_argument("--spinc", help="Only compare this Spin^c label.",
                               type=int, default=None)
    parser_oracle.add_argument("--window", help="Number of cone slots on either side.",
                               type=int, default=None)
    parser_oracle.add_argument("--height", help="Number of elements kept per tower.",
                               type=int, default=None)
    parser_oracle.add_argument("--char", help="Characteristic of the coefficient field.",
                               type=int, default=None)
    parser_oracle.add_argument("--seed", help="Seed of the random attaching maps.",
                               type=int, default=None)
    parser_oracle.add_argument("--trials", help="Run this many randomized trials instead "
                                                "of comparing a given knot.",
                               type=int, default=None)

    parser_obstruct = sub_parsers.add_parser(OBSTRUCT_MODE,
                                             help="Run the obstruction checks for a knot "
                                                  "and a target manifold.")
    _add_common(parser_obstruct, "A knot document and optionally a manifold document.")
    _add_slope(parser_obstruct)

    parser_enumerate = sub_parsers.add_parser(ENUMERATE_MODE,
                                              help="Candidate Alexander polynomials of "
                                                   "alternating knots with a surgery to Y.")
    _add_common(parser_enumerate, "The manifold document.")
    parser_enumerate.add_argument("--max-candidates",
                                  help="Stop after this many candidates.",
                                  type=int, default=None)

    parser_recover = sub_parsers.add_parser(RECOVER_MODE,
                                            help="Alexander polynomial of an L-space knot "
                                                 "from one of its surgeries.")
    _add_common(parser_recover, "The manifold document.")
    _add_slope(parser_recover)

    parser_examples = sub_parsers.add_parser(EXAMPLES_MODE,
                                             help="Regenerate the outputs for the bundled "
                                                  "examples.")
    parser_examples.add_argument("--out", help="Directory to write to.",
                                 type=str, default='golden')
    parser_examples.add_argument("--pool-size", type=int, default=None,
                                 help="Size of the gevent pool.")

    if argv is None and len(sys.argv) == 1:
        p.print_help()
        return None

    args = p.parse_args(argv)
    if args.command is None:
        p.print_help()
        return None
    if getattr(args, 'spinc', None) is not None and len(args.slope or []) != 1:
        p.error("--spinc needs exactly one --slope")
    if args.command == ORACLE_MODE and args.trials is not None and \
            (args.input or args.slope):
        p.error("--trials draws its own knots and slopes; drop --input and --slope")
    if args.command in (COMPUTE_MODE, OBSTRUCT_MODE, ENUMERATE_MODE, RECOVER_MODE) \
            and not args.input:
        p.error(f"{args.command} needs --input")
    return args


def apply_config(args, cfg_dict):
    """
    Fills the arguments left unset on the command line from the
    configuration dictionary.
    """
    oracle_cfg = cfg_dict.get('oracle', {})
    if getattr(args, 'pool_size', None) is None:
        args.pool_size = cfg_dict.get('pool_size')
    if args.command == ORACLE_MODE:
        if args.char is None:
            args.char = oracle_cfg.get('characteristic', DEFAULT_CHARACTERISTIC)
        if args.seed is None:
            args.seed = oracle_cfg.get('seed', DEFAULT_SEED)
        args.window_margin = oracle_cfg.get('window_margin', 1)
        args.height_margin = oracle_cfg.get('height_margin', 2)
        args.random_models = cfg_dict.get('random_models', {})
    if args.command == ENUMERATE_MODE and args.max_candidates is None:
        args.max_candidates = cfg_dict.get('enumerate', {}).get('max_candidates')
    return args


def read_inputs(paths):
    """
    Loads the documents named on the command line.

    Returns
    -------

    KnotSurgeryModel, ManifoldHF:
        The knot and the manifold, either None when not given.
    """
    model, y = None, None
    for path in paths:
        doc = load_document(path)
        if doc.get(KIND_KEY) == KIND_KNOT:
            model = knot_from_document(doc)
        elif doc.get(KIND_KEY) == KIND_MANIFOLD:
            y = manifold_from_document(doc)
        else:
            raise SchemaError(KIND_KEY, f"{path}: expected {KIND_KNOT!r} or "
                                        f"{KIND_MANIFOLD!r}, found {doc.get(KIND_KEY)!r}")
    return model, y


def checked_model(model):
    """
    Returns the model, raising InvalidModelError naming the violated
    properties when validate() reports any.
    """
    violations = validate(model)
    for v in violations:
        logger.error(f"{model.name}: {v.name}: {v.detail}")
    if violations:
        raise InvalidModelError(f"{model.name} violates "
                                f"{', '.join(v.name for v in violations)}")
    return model


def _require(value, what):
    if value is None:
        error_str = f"This command needs {what}."
        logger.error(error_str)
        raise SchemaError('--input', error_str)
    return value


def _header(kind):
    return {SCHEMA_KEY: SCHEMA_VERSION, KIND_KEY: kind}


def _restrict(y, spinc):
    if spinc is not None:
        y.structures = [s for s in y.structures if s.index == spinc]
    return y


def do_compute(args):
    model = checked_model(_require(read_inputs(args.input)[0], 'a knot document'))
    manifolds = [_restrict(full_surgery(model, slope, args.pool_size), args.spinc)
                 for slope in args.slope]
    if args.format == TABLE_FORMAT:
        return EXIT_OK, '\n'.join(render_table(y) for y in manifolds)
    docs = [manifold_to_document(y) for y in manifolds]
    return EXIT_OK, dump_document(docs[0]) if len(docs) == 1 else dump_documents(docs)


def _oracle_lines(reports):
    lines = [f"{'knot':<12} {'slope':>6} {'i':>3} {'W':>4} {'M':>4}  result"]
    for r in reports:
        result = 'pass' if r.passed else (f"inconclusive: {r.inconclusive}"
                                          if r.inconclusive else 'MISMATCH')
        lines.append(f"{r.model_name:<12} {str(r.slope):>6} {r.index:>3} "
                     f"{r.window:>4} {r.height:>4}  {result}")
    return '\n'.join(lines) + '\n'


def do_oracle(args):
    if args.trials is not None:
        bounds = args.random_models
        summary = oracle_trials(args.trials, args.seed, args.char, args.pool_size,
                                **bounds)
        status = EXIT_CHECK_FAILED if summary.failures else EXIT_OK
        if args.format == TABLE_FORMAT:
            return status, f"{summary.comparisons} comparisons over F_{args.char}, " \
                           f"seed {args.seed}: {len(summary.failures)} failures, " \
                           f"{len(summary.inconclusive)} inconclusive\n" + \
                           (_oracle_lines(summary.failures) if summary.failures else '')
        doc = _header('oracle-trials')
        doc.update(summary.to_dict())
        return status, dump_document(doc)

    model = checked_model(_require(read_inputs(args.input)[0], 'a knot document'))
    if not args.slope:
        raise SchemaError('--slope', 'oracle needs --slope or --trials')
    reports = []
    for slope in args.slope:
        if args.spinc is not None:
            reports.append(compare(model, slope, args.spinc, args.window, args.height,
                                   args.char, args.seed, args.window_margin,
                                   args.height_margin))
        else:
            reports += compare_all(model, slope, args.char, args.seed, args.window,
                                   args.height, args.pool_size)
    failed = [r for r in reports if r.inconclusive is None and not r.passed]
    for r in reports:
        if r.inconclusive is not None:
            logger.warning(f"{r.model_name} at {r.slope}, structure {r.index}: "
                           f"inconclusive ({r.inconclusive}).")
    status = EXIT_CHECK_FAILED if failed else EXIT_OK
    if args.format == TABLE_FORMAT:
        return status, _oracle_lines(reports)
    doc = _header('oracle')
    doc['reports'] = [r.to_dict() for r in reports]
    return status, dump_document(doc)


def obstruction_document(model, y, slopes):
    """
    The obstruction reports for (model, Y) at each slope, with whether the
    closed form reproduces Y there. With no slopes the candidate slopes of
    Y are used.
    """
    doc = _header('obstructions')
    doc['knot'] = model.name
    doc['target'] = y.name
    doc['n'] = slope_denominator_bound(y)
    doc['c'] = format_rational(c_invariant(y))
    doc['genus_bound'] = alternating_genus_bound(y)
    entries = []
    for slope in slopes or candidate_slopes(y):
        report = run_obstructions(model, y, slope)
        entry = {'slope': str(slope)}
        if abs(slope.p) == y.h1_order:
            same, diff = surgery_matches(model, slope, y)
            entry['matches'] = same
            if not same:
                entry['difference'] = diff
        entry.update(report.to_dict())
        entries.append(entry)
    doc['slopes'] = entries
    return doc


def _check_lines(doc):
    lines = [f"{doc['knot']} -> {doc['target']}   n(Y) = {doc['n']}   c(Y) = {doc['c']}"]
    for entry in doc['slopes']:
        lines.append(f"slope {entry['slope']}: matches = {entry.get('matches', '-')}")
        for c in entry['checks']:
            witness = ', '.join(f"{k}={v}" for k, v in c['witness'].items())
            lines.append(f"  {c['status']:<12} {c['name']:<22} {witness}")
    return '\n'.join(lines) + '\n'


def do_obstruct(args):
    model, y = read_inputs(args.input)
    model = checked_model(_require(model, 'a knot document'))
    if y is None:
        slopes = _require(args.slope, 'a manifold document or --slope')
        docs = [obstruction_document(model, full_surgery(model, s, args.pool_size), [s])
                for s in slopes]
    else:
        docs = [obstruction_document(model, y, args.slope)]
    failed = any(c['status'] == FAIL for doc in docs for entry in doc['slopes']
                 for c in entry['checks'])
    status = EXIT_CHECK_FAILED if failed else EXIT_OK
    if args.format == TABLE_FORMAT:
        return status, ''.join(_check_lines(doc) for doc in docs)
    return status, dump_document(docs[0]) if len(docs) == 1 else dump_documents(docs)


def do_enumerate(args):
    y = _require(read_inputs(args.input)[1], 'a manifold document')
    result = enumerate_alternating_alexander(y, args.max_candidates, args.pool_size)
    if args.format == TABLE_FORMAT:
        lines = [f"c(Y) = {format_rational(result.bound)}, {len(result.candidates)} "
                 f"candidates{' (truncated)' if result.truncated else ''}"]
        lines += [f"  det {c.determinant:>4}  {c.alexander}" for c in result.candidates]
        return EXIT_OK, '\n'.join(lines) + '\n'
    doc = _header('alexander-candidates')
    doc['target'] = y.name
    doc.update(result.to_dict())
    doc['c'] = format_rational(result.bound)
    return EXIT_OK, dump_document(doc)


def do_recover(args):
    y = _require(read_inputs(args.input)[1], 'a manifold document')
    slope = args.slope[0] if args.slope else _require(y.slope, '--slope')
    doc = _header('alexander')
    doc['source'] = y.name
    doc['slope'] = str(slope)
    try:
        alex = recover_alexander_lspace(y, slope)
    except NotAnLSpaceKnotError as e:
        doc['error'] = 'not-an-L-space-knot-surgery'
        doc['detail'] = str(e)
        text = f"{y.name} at {slope}: not an L-space knot surgery ({e})\n"
        return EXIT_CHECK_FAILED, text if args.format == TABLE_FORMAT else dump_document(doc)
    doc['alexander'] = alex.coefficients()
    text = f"{y.name} at {slope}: Delta = {alex}\n"
    return EXIT_OK, text if args.format == TABLE_FORMAT else dump_document(doc)


def _slope_tag(slope):
    return str(slope).replace('-', 'm').replace('/', '_')


def write_examples(out_dir, pool_size=None):
    """
    Writes the surgery, obstruction and enumeration outputs of the bundled
    examples to `out_dir`, one YAML document per file.

    Returns
    -------

    list of str:
        The files written, in order.
    """
    os.makedirs(out_dir, exist_ok=True)
    written = []

    def write(name, doc):
        path = os.path.join(out_dir, f"{name}.yaml")
        with open(path, 'w') as f:
            dump_document(doc, f)
        written.append(path)

    models = {}
    for name, slopes in EXAMPLE_SURGERIES:
        models[name] = checked_model(knot_from_document(load_document(example_path(name))))
        for text in slopes:
            slope = Slope.parse(text)
            y = full_surgery(models[name], slope, pool_size)
            write(f"{name}_{_slope_tag(slope)}", manifold_to_document(y))
    for p in EXAMPLE_TORUS_P:
        model = torus_two_model(p)
        write(f"T{p}2_1_1", manifold_to_document(full_surgery(model, Slope(1), pool_size)))

    teragaito = manifold_from_document(load_document(example_path('teragaito')))
    write('teragaito_obstructions', obstruction_document(models['K0'], teragaito, None))
    result = enumerate_alternating_alexander(teragaito, pool_size=pool_size)
    doc = _header('alexander-candidates')
    doc['target'] = teragaito.name
    doc.update(result.to_dict())
    doc['c'] = format_rational(result.bound)
    write('teragaito_alexander_candidates', doc)
    logger.info(f"Wrote {len(written)} example outputs to {out_dir}.")
    return written


def do_examples(args):
    written = write_examples(args.out, args.pool_size)
    return EXIT_OK, '\n'.join(written) + '\n'


COMMANDS = {
    COMPUTE_MODE: do_compute,
    ORACLE_MODE: do_oracle,
    OBSTRUCT_MODE: do_obstruct,
    ENUMERATE_MODE: do_enumerate,
    RECOVER_MODE: do_recover,
    EXAMPLES_MODE: do_examples,
}


def run(argv=None):
    """
    Main run function of the hf-surgery tool; returns the exit status.
    """
    args = get_args(argv)
    if args is None:
        return EXIT_OK
    if args.verbose:
        logging.getLogger('hf_surgery').setLevel(logging.DEBUG)
        for name in list(logging.root.manager.loggerDict):
            if name.startswith('hf_surgery'):
                logging.getLogger(name).setLevel(logging.DEBUG)

    try:
        cfg_dict = load_defaults(args.config)
        apply_config(args, cfg_dict)
        status, text = COMMANDS[args.command](args)
    except (HFSurgeryError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_BAD_INPUT

    if getattr(args, 'out', None) is not None and args.command != EXAMPLES_MODE:
        with open(args.out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == '__main__':
    sys.exit(run())
