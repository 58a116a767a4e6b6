#
# Copyright 2026 simdsl team
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
from __future__ import annotations

import argparse
from argparse import ArgumentParser, Namespace
import asyncio
from collections import Counter
import logging
import pathlib
import sys
from typing import Any

from simdsl.const import DEFAULT_GAMMA, MAX_STEPS_ENV, PROGRAM_EXTENSION
from simdsl.dataset import (
    QAExample,
    Split,
    classify_complexity,
    classify_program,
    generate_synthetic_corpus,
    load_dataset,
    write_dataset,
)
from simdsl.dataset.synthetic import DEFAULT_CORPUS_SIZE
from simdsl.dsl import Diagnostic, Program, parse_source, pretty_print
from simdsl.exceptions import (
    CheckpointError,
    ConfigurationError,
    DatasetError,
    ExecutionFault,
    LexError,
    ParseError,
    SimDslException,
    TrainingDivergedError,
)
from simdsl.harness import (
    EvaluationMode,
    HarnessConfig,
    evaluate_accuracy,
    gamma_sweep,
    initial_policy,
    reinforce_train,
)
from simdsl.interpreter import Value, execute
from simdsl.policy import (
    LogLinearPolicy,
    load_checkpoint,
    mle_pretrain,
    save_checkpoint,
)
import simdsl.sdjson as sdjson
from simdsl.similarity import RewardConfig, combined_reward

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_RUNTIME_ERROR = 2
EXIT_INTERNAL_ERROR = 3

SPLIT_ALL = "all"


class InvalidInput(SimDslException):
    """A command was pointed at input it cannot use; exits with status 1."""


def setup_logging(level: str | None) -> None:
    """
    Set up the logging to use a decent format and the log level given as parameter.
    :param level: the log level used for the root logger
    """
    logging.basicConfig(
        format="%(asctime)s %(filename)s:%(lineno)04d %(levelname)s %(message)s"
    )
    if level:
        numeric_level = getattr(logging, level.upper(), None)
        if not isinstance(numeric_level, int):
            raise ValueError("Invalid log level: %s" % level)
        logging.getLogger().setLevel(numeric_level)


def add_log_arguments(parser: ArgumentParser) -> None:
    """
    Adds command line arguments to control logging behaviour.
    :param parser: The argparse.ArgumentParser object to add to.
    """
    parser.add_argument("--log", action="store", dest="loglevel")


def emit(args: Namespace, data: Any, text: str) -> None:
    if args.format == "json":
        print(sdjson.dumps_indented(data))
    else:
        print(text)


def format_value(value: Value | None) -> str:
    # ints print without a decimal point, reals keep theirs
    return "none" if value is None else str(value)


def read_source(path: str) -> str:
    try:
        return pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise InvalidInput(f"cannot read {path}: not valid UTF-8") from exc


def diagnostics_of(exc: LexError | ParseError) -> list[Diagnostic]:
    if isinstance(exc, ParseError):
        return list(exc.diagnostics)
    return [Diagnostic(exc.message, exc.span)]


def report_diagnostics(
    args: Namespace, source: str, filename: str, exc: LexError | ParseError
) -> int:
    diagnostics = diagnostics_of(exc)
    if args.format == "json":
        data = {
            "ok": False,
            "diagnostics": [
                {
                    "message": diagnostic.message,
                    "span": list(diagnostic.span),
                    "severity": diagnostic.severity.value,
                }
                for diagnostic in diagnostics
            ],
        }
        print(sdjson.dumps_indented(data))
    else:
        for diagnostic in diagnostics:
            print(diagnostic.format(source, filename), file=sys.stderr)
    return EXIT_INPUT_ERROR


def load_program(args: Namespace, path: str) -> tuple[str, Program | int]:
    """Returns the source and either the program or an exit status."""
    source = read_source(path)
    try:
        return source, parse_source(source)
    except (LexError, ParseError) as exc:
        return source, report_diagnostics(args, source, path, exc)


async def check(args: Namespace) -> int:
    _, program = load_program(args, args.file)
    if isinstance(program, int):
        return program
    canonical = pretty_print(program)
    emit(args, {"ok": True, "program": canonical}, canonical)
    return EXIT_OK


async def run(args: Namespace) -> int:
    _, program = load_program(args, args.file)
    if isinstance(program, int):
        return program

    outcome = execute(program, args.max_steps)
    failed = not outcome.returned

    if args.format == "json":
        data: dict[str, Any] = {
            "status": outcome.status.value,
            "answer": outcome.value,
            "steps": outcome.steps_executed,
        }
        if outcome.fault is not None:
            data["error"] = {
                "kind": outcome.fault.kind.value,
                "step": outcome.fault.step,
                "message": outcome.fault.message,
            }
        if args.trace:
            data["trace"] = outcome.trace.as_list()
        print(sdjson.dumps_indented(data))
    else:
        if args.trace:
            print(outcome.trace.to_json())
        if outcome.fault is not None:
            print(f"error: {outcome.fault}", file=sys.stderr)
        elif failed:
            print("error: program finished without returning", file=sys.stderr)
        elif args.command == "run":
            print(format_value(outcome.value))

    return EXIT_RUNTIME_ERROR if failed else EXIT_OK


async def score(args: Namespace) -> int:
    reference = read_source(args.reference)
    predicted = read_source(args.predicted)
    try:
        parse_source(reference)
    except (LexError, ParseError) as exc:
        return report_diagnostics(args, reference, args.reference, exc)

    config = RewardConfig(gamma=args.gamma, max_steps=args.max_steps)
    scores = combined_reward(reference, predicted, config)
    # Always JSON, whatever --format says.
    print(
        sdjson.dumps_indented(
            {
                **scores.as_dict(),
                "parseable": scores.parseable,
                "executable": scores.executable,
            }
        )
    )
    return EXIT_OK


def select_split(examples: list[QAExample], split: str) -> list[QAExample]:
    if split == SPLIT_ALL:
        return examples
    return [example for example in examples if example.split is Split(split)]


def load_examples(args: Namespace, split: str) -> list[QAExample]:
    location = pathlib.Path(args.dataset)
    examples, report = load_dataset(location, max_steps=args.max_steps)
    for entry in report.quarantined:
        logger.warning("Quarantined line %d: %s", entry.line, entry.reason)
    selected = select_split(examples, split)
    if not selected:
        raise InvalidInput(f"no valid {split} examples in {args.dataset}")
    return selected


def harness_config(args: Namespace) -> HarnessConfig:
    return HarnessConfig(
        n=args.n,
        s=args.s,
        batch_size=args.batch,
        gamma=getattr(args, "gamma", DEFAULT_GAMMA),
        beam_width=args.beam_width,
        learning_rate=args.lr,
        epochs=args.epochs,
        max_steps=args.max_steps,
        max_len=args.max_len,
        seed=args.seed,
        jobs=args.jobs,
        pretrain_epochs=args.pretrain_epochs,
        pretrain_learning_rate=args.pretrain_lr,
        semantic_reward=not getattr(args, "bleu_only", False),
        log_candidates=getattr(args, "log_candidates", False),
    )


def starting_policy(
    args: Namespace, examples: list[QAExample], config: HarnessConfig
) -> LogLinearPolicy:
    """The checkpoint given with --checkpoint-in, or a freshly pre-trained policy."""
    if args.checkpoint_in:
        return load_checkpoint(pathlib.Path(args.checkpoint_in))
    model = initial_policy(examples)
    mle_pretrain(
        model,
        examples,
        config.pretrain_epochs,
        config.pretrain_learning_rate,
        config.pretrain_batch_size,
        config.seed,
    )
    return model


async def train(args: Namespace) -> int:
    examples = load_examples(args, args.split)
    config = harness_config(args)
    model = starting_policy(args, examples, config)

    log_path = pathlib.Path(args.log_out) if args.log_out else None
    result = reinforce_train(model, examples, config, log_path)
    if args.checkpoint_out:
        save_checkpoint(model, pathlib.Path(args.checkpoint_out))

    mean_q = result.mean_q_by_epoch()
    summary = f"trained on {len(examples)} examples, {len(result.records)} batches"
    if mean_q:
        summary += f", final mean Q {mean_q[-1]:.4f}"
    emit(
        args,
        {
            "examples": len(examples),
            "batches": len(result.records),
            "mean_q_by_epoch": mean_q,
            "checkpoint": args.checkpoint_out,
        },
        summary,
    )
    return EXIT_OK


async def evaluate(args: Namespace) -> int:
    examples = load_examples(args, args.split)
    config = harness_config(args)
    model = load_checkpoint(pathlib.Path(args.checkpoint))
    report = evaluate_accuracy(model, examples, config, EvaluationMode(args.mode))

    lines = [f"accuracy {report.accuracy:.4f} ({report.correct}/{report.total})"]
    for name, value in {**report.by_version, **report.by_complexity}.items():
        lines.append(f"  {name}: {value:.4f}")
    emit(args, report.as_dict(include_results=args.results), "\n".join(lines))
    return EXIT_OK


async def sweep(args: Namespace) -> int:
    examples = load_examples(args, args.split)
    test_set = load_examples(args, args.test_split) if args.test_split else None
    config = harness_config(args)
    model = starting_policy(args, examples, config)

    rows = gamma_sweep(
        model,
        examples,
        args.gammas,
        config,
        test_set=test_set,
        mode=EvaluationMode(args.mode),
        include_baseline=args.baseline,
    )
    table = [f"{'run':<12} {'gamma':>6} {'accuracy':>9}"]
    for row in rows:
        gamma = "-" if row.gamma is None else f"{row.gamma:g}"
        table.append(f"{row.label:<12} {gamma:>6} {row.accuracy:>9.4f}")
    emit(args, [row.as_dict() for row in rows], "\n".join(table))
    return EXIT_OK


async def classify(args: Namespace) -> int:
    if args.path.endswith(PROGRAM_EXTENSION):
        _, program = load_program(args, args.path)
        if isinstance(program, int):
            return program
        label = classify_program(program, args.max_steps)
        emit(args, label.as_dict(), label.label.value)
        return EXIT_OK

    args.dataset = args.path
    examples = load_examples(args, SPLIT_ALL)
    labels = {
        example.id: classify_complexity(example, args.max_steps)
        for example in examples
    }
    counts = Counter(label.label.value for label in labels.values())
    emit(
        args,
        {
            "counts": dict(counts),
            "examples": {key: label.as_dict() for key, label in labels.items()},
        },
        "\n".join(f"{key}\t{label.label.value}" for key, label in labels.items()),
    )
    return EXIT_OK


async def corpus(args: Namespace) -> int:
    examples = generate_synthetic_corpus(args.size, args.seed)
    write_dataset(pathlib.Path(args.output), examples)
    emit(
        args,
        {"written": len(examples), "path": args.output},
        f"wrote {len(examples)} examples to {args.output}",
    )
    return EXIT_OK


def parse_gammas(value: str) -> list[float]:
    try:
        gammas = [float(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {value!r}")
    if not gammas or not all(0.0 <= gamma <= 1.0 for gamma in gammas):
        raise argparse.ArgumentTypeError("gammas must be numbers in [0, 1]")
    return gammas


def add_max_steps_argument(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--max-steps",
        action="store",
        dest="max_steps",
        type=int,
        default=None,
        help=f"step cap for execution (defaults to ${MAX_STEPS_ENV} or 1000000)",
    )


def add_mode_argument(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--mode",
        default=EvaluationMode.EXACT.value,
        choices=EvaluationMode.wire_values(),
    )


def add_harness_arguments(parser: ArgumentParser, split: str) -> None:
    defaults = HarnessConfig()
    splits = [*Split.wire_values(), SPLIT_ALL]
    parser.add_argument("dataset", help="dataset in JSON-lines format")
    parser.add_argument(
        "--split",
        action="store",
        default=split,
        choices=splits,
        help=f"which examples to use (defaults to {split})",
    )
    parser.add_argument(
        "--n", type=int, default=defaults.n, help="candidates decoded per example"
    )
    parser.add_argument(
        "--s", type=int, default=defaults.s, help="candidates kept per example"
    )
    parser.add_argument(
        "--batch", type=int, default=defaults.batch_size, help="candidates per update"
    )
    parser.add_argument(
        "--beam-width", dest="beam_width", type=int, default=defaults.beam_width
    )
    parser.add_argument("--epochs", type=int, default=defaults.epochs)
    parser.add_argument("--lr", type=float, default=defaults.learning_rate)
    parser.add_argument(
        "--pretrain-epochs",
        dest="pretrain_epochs",
        type=int,
        default=defaults.pretrain_epochs,
    )
    parser.add_argument(
        "--pretrain-lr",
        dest="pretrain_lr",
        type=float,
        default=defaults.pretrain_learning_rate,
    )
    parser.add_argument("--max-len", dest="max_len", type=int, default=defaults.max_len)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument(
        "--jobs", type=int, default=None, help="worker threads (defaults to CPU count)"
    )
    add_max_steps_argument(parser)


async def main(argv: list[str] | None = None) -> None:
    argv = argv or sys.argv[1:]

    parser = argparse.ArgumentParser(
        description="simdsl",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_log_arguments(parser)
    parser.add_argument(
        "--format",
        action="store",
        dest="format",
        default="text",
        choices=["text", "json"],
        help="Specify output format",
    )

    subparsers = parser.add_subparsers(
        title="available commands", metavar="command [options ...]", dest="command"
    )

    # check
    check_parser = subparsers.add_parser(
        "check", help="Check a program and print its canonical form"
    )
    check_parser.set_defaults(func=check)
    check_parser.add_argument("file", help="program source")

    # run
    run_parser = subparsers.add_parser(
        "run", help="Execute a program and print its answer"
    )
    run_parser.set_defaults(func=run)
    run_parser.add_argument("file", help="program source")
    run_parser.add_argument(
        "--trace", action="store_true", help="also print the execution trace"
    )
    add_max_steps_argument(run_parser)

    # trace
    trace_parser = subparsers.add_parser(
        "trace", help="Execute a program and print its execution trace as JSON"
    )
    trace_parser.set_defaults(func=run, trace=True)
    trace_parser.add_argument("file", help="program source")
    add_max_steps_argument(trace_parser)

    # score
    score_parser = subparsers.add_parser(
        "score", help="Score a predicted program against a reference"
    )
    score_parser.set_defaults(func=score)
    score_parser.add_argument("reference", help="reference program")
    score_parser.add_argument("predicted", help="predicted program")
    score_parser.add_argument(
        "--gamma",
        type=float,
        default=DEFAULT_GAMMA,
        help="weight of the syntactic reward",
    )
    add_max_steps_argument(score_parser)

    # train
    train_parser = subparsers.add_parser(
        "train", help="Train a policy on a dataset with REINFORCE"
    )
    train_parser.set_defaults(func=train)
    add_harness_arguments(train_parser, Split.TRAIN.value)
    train_parser.add_argument("--gamma", type=float, default=DEFAULT_GAMMA)
    train_parser.add_argument(
        "--checkpoint-in",
        dest="checkpoint_in",
        help="start from this checkpoint instead of MLE pre-training",
    )
    train_parser.add_argument(
        "--checkpoint-out",
        dest="checkpoint_out",
        help="where to save the trained policy",
    )
    train_parser.add_argument(
        "--log-out", dest="log_out", help="write one JSON line per batch here"
    )
    train_parser.add_argument(
        "--log-candidates",
        dest="log_candidates",
        action="store_true",
        help="include the scored candidates in the training log",
    )
    train_parser.add_argument(
        "--bleu-only",
        dest="bleu_only",
        action="store_true",
        help="withhold the reference trace so only BLEU is rewarded",
    )

    # eval
    eval_parser = subparsers.add_parser("eval", help="Measure the accuracy of a policy")
    eval_parser.set_defaults(func=evaluate)
    add_harness_arguments(eval_parser, Split.TEST.value)
    eval_parser.add_argument("--checkpoint", required=True, help="policy checkpoint")
    add_mode_argument(eval_parser)
    eval_parser.add_argument(
        "--results",
        action="store_true",
        help="include per-example results in JSON output",
    )

    # sweep
    sweep_parser = subparsers.add_parser(
        "sweep", help="Train and evaluate once per gamma from the same checkpoint"
    )
    sweep_parser.set_defaults(func=sweep)
    add_harness_arguments(sweep_parser, Split.TRAIN.value)
    sweep_parser.add_argument(
        "--gammas", type=parse_gammas, default=[0.0, 0.5, 1.0], help="e.g. 0,0.5,1"
    )
    sweep_parser.add_argument("--checkpoint-in", dest="checkpoint_in")
    sweep_parser.add_argument(
        "--test-split",
        dest="test_split",
        choices=[*Split.wire_values(), SPLIT_ALL],
        help="evaluate on this split instead of the training examples",
    )
    add_mode_argument(sweep_parser)
    sweep_parser.add_argument(
        "--baseline", action="store_true", help="add a row for the MLE-only policy"
    )

    # classify
    classify_parser = subparsers.add_parser(
        "classify", help="Label a program or each dataset example by complexity"
    )
    classify_parser.set_defaults(func=classify)
    classify_parser.add_argument(
        "path", help=f"a {PROGRAM_EXTENSION} program or a JSON-lines dataset"
    )
    add_max_steps_argument(classify_parser)

    # corpus
    corpus_parser = subparsers.add_parser(
        "corpus", help="Write the template-generated synthetic corpus"
    )
    corpus_parser.set_defaults(func=corpus)
    corpus_parser.add_argument("output", help="JSON-lines file to write")
    corpus_parser.add_argument("--size", type=int, default=DEFAULT_CORPUS_SIZE)
    corpus_parser.add_argument("--seed", type=int, default=0)

    args = parser.parse_args(argv)

    setup_logging(args.loglevel)

    if not hasattr(args, "func"):
        parser.print_help()
        sys.exit(EXIT_INPUT_ERROR)

    try:
        status = await args.func(args)
    except (InvalidInput, DatasetError, CheckpointError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_INPUT_ERROR
    except (ExecutionFault, TrainingDivergedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_RUNTIME_ERROR
    except Exception:
        logger.exception("Internal error running %s", args.command)
        status = EXIT_INTERNAL_ERROR

    if status != EXIT_OK:
        sys.exit(status)


def sync_main():
    try:
        asyncio.run(main())
    except KeyboardInterrupt:
        pass


if __name__ == "__main__":
    sync_main()
