"""Command-line entry point.

Offline by default: the scripted backend, rule detectors, and the hash
embedding provider serve every command without credentials; the network is
touched only under an explicit `--backend remote`.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import clarify as clarify_mod
from . import dataset as dataset_mod
from . import detection as detection_mod
from . import gateway as gateway_mod
from . import metrics as metrics_mod
from . import traces as traces_mod
from .stl import parser as stl_parser
from .stl import printer as stl_printer
from .stl import semantics as stl_semantics
from .stl import template as stl_template


class CliError(RuntimeError):
    pass


def _emit(obj: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "lines":
        print(json.dumps(obj, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _load_lexicon(path: str | None) -> dataset_mod.PhraseLexicon:
    if path:
        return dataset_mod.load_lexicon(path)
    return dataset_mod.default_lexicon()


def _make_backend(args) -> object:
    if args.backend == "remote":
        return gateway_mod.RemoteBackend()
    if not args.fixture:
        raise CliError("scripted backend needs --fixture <path>")
    return gateway_mod.ScriptedBackend(gateway_mod.load_fixture(args.fixture))


def _make_detectors(args, backend):
    lexicon = _load_lexicon(getattr(args, "lexicon", None))
    if args.detectors == "scripted":
        return (
            lambda text: detection_mod.detect_vagueness(text, backend),
            lambda text: detection_mod.detect_ambiguity_prompt(text, backend),
        )
    vag = lambda text: detection_mod.rule_detect_vagueness(text, lexicon)
    if getattr(args, "model", None):
        model = detection_mod.load_model(args.model)
        provider = gateway_mod.HashEmbeddingProvider(model.input_dim)
        amb = lambda text: detection_mod.classify_ambiguity(model, text, provider)
    else:
        amb = lambda text: detection_mod.rule_detect_ambiguity(text, lexicon)
    return vag, amb


# --- commands ----------------------------------------------------------------


def _cmd_parse(args) -> int:
    formula = stl_parser.parse(args.formula)
    text = stl_printer.render(formula)
    _emit({"formula": text}, args.format, [text])
    return 0


def _cmd_check(args) -> int:
    diagnostics = stl_parser.check_syntax(args.formula)
    obj = {"ok": not diagnostics, "diagnostics": [
        {"position": pos, "message": msg} for pos, msg in diagnostics
    ]}
    lines = ["ok"] if not diagnostics else [f"{pos}: {msg}" for pos, msg in diagnostics]
    _emit(obj, args.format, lines)
    return 0 if not diagnostics else 1


def _cmd_template(args) -> int:
    template = stl_template.extract_template(stl_parser.parse(args.formula))
    _emit({"template": template.text}, args.format, [template.text])
    return 0


def _cmd_monitor(args) -> int:
    formula = stl_parser.parse(args.formula)
    records = []
    with open(args.trace, "r", encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                records.append(traces_mod.trace_from_record(json.loads(line)))
    if not records:
        raise CliError(f"no traces in {args.trace}")
    if not 0 <= args.index < len(records):
        raise CliError(f"trace index {args.index} out of range")
    verdict = stl_semantics.evaluate(formula, records[args.index], args.at)
    _emit(
        {"satisfied": verdict, "at": args.at, "index": args.index},
        args.format,
        ["true" if verdict else "false"],
    )
    return 0


def _parse_plan(text: str, seed: int, mode: str) -> dataset_mod.MutationPlan:
    counts = {"temporal": 0, "numerical": 0, "conditional": 0, "referential": 0, "semantic": 0}
    aliases = {
        "temporal": "temporal",
        "numerical": "numerical",
        "conditionallogic": "conditional",
        "conditional": "conditional",
        "referential": "referential",
        "semantic": "semantic",
    }
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise CliError(f"plan entries look like Type=N, got {part!r}")
        key, _, value = part.partition("=")
        alias = aliases.get(key.strip().lower())
        if alias is None:
            raise CliError(f"unknown mutation type {key.strip()!r}")
        counts[alias] = int(value)
    return dataset_mod.MutationPlan(seed=seed, mode=mode, **counts)


def _cmd_mutate(args) -> int:
    corpus = dataset_mod.read_records(args.input)
    plan = _parse_plan(args.plan, args.seed, args.mode)
    backend = None
    if plan.mode == "llm-assisted":
        backend = _make_backend(args)
    records, report = dataset_mod.build_dataset(
        corpus, plan, _load_lexicon(args.lexicon), backend
    )
    dataset_mod.write_records(args.output, records)
    obj = {
        "written": len(records),
        "per_type": {
            t: {"applied": r.applied, "skipped": r.skipped, "rejected": r.rejected}
            for t, r in report.per_type.items()
        },
        "partial": report.partial,
    }
    lines = [f"wrote {len(records)} records to {args.output}"]
    for t, r in report.per_type.items():
        lines.append(f"  {t}: applied={r.applied} skipped={r.skipped} rejected={r.rejected}")
    lines.extend(f"  note: {p}" for p in report.partial)
    _emit(obj, args.format, lines)
    return 0


def _cmd_train_ambiguity(args) -> int:
    records = dataset_mod.read_records(args.input)
    labeled = [(r.nl, 1 if r.label == "ambiguous" else 0) for r in records]
    provider = gateway_mod.HashEmbeddingProvider(args.dim)
    config = detection_mod.TrainingConfig(
        epochs=args.epochs,
        batch=args.batch,
        lr=args.lr,
        margin=args.margin,
        dropout=args.dropout,
        seed=args.seed,
    )
    model, log = detection_mod.train_ambiguity_model(labeled, provider, config)
    detection_mod.save_model(args.output, model)
    obj = {
        "model": args.output,
        "epochs": [
            {"epoch": s.epoch, "triplet": s.mean_triplet_loss, "cross_entropy": s.mean_cross_entropy}
            for s in log
        ],
    }
    lines = [f"saved model to {args.output}"]
    lines.extend(
        f"  epoch {s.epoch}: triplet={s.mean_triplet_loss:.4f} ce={s.mean_cross_entropy:.4f}"
        for s in log
    )
    _emit(obj, args.format, lines)
    return 0


def _cmd_detect(args) -> int:
    lexicon = _load_lexicon(args.lexicon)
    if args.kind == "vagueness":
        if args.mode == "scripted":
            backend = _make_backend(args)
            result = detection_mod.detect_vagueness(args.text, backend)
        else:
            result = detection_mod.rule_detect_vagueness(args.text, lexicon)
    else:
        if args.mode == "model":
            if not args.model:
                raise CliError("--mode model needs --model <path>")
            model = detection_mod.load_model(args.model)
            provider = gateway_mod.HashEmbeddingProvider(model.input_dim)
            result = detection_mod.classify_ambiguity(model, args.text, provider)
        elif args.mode == "scripted":
            backend = _make_backend(args)
            result = detection_mod.detect_ambiguity_prompt(args.text, backend)
        else:
            result = detection_mod.rule_detect_ambiguity(args.text, lexicon)
    obj = {
        "defective": result.is_defective,
        "types": sorted(result.types),
        "confidence": result.confidence,
        "rationale": result.rationale,
    }
    verdict = "defective" if result.is_defective else "clean"
    lines = [f"{verdict} {sorted(result.types)} confidence={result.confidence:.3f}"]
    _emit(obj, args.format, lines)
    return 0


def _cmd_evaluate(args) -> int:
    pairs = []
    with open(args.pairs, "r", encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                obj = json.loads(line)
                pairs.append((obj["generated"], obj["reference"]))
    if not pairs:
        raise CliError(f"no pairs in {args.pairs}")
    provider = gateway_mod.HashEmbeddingProvider()
    rows = []
    for generated, reference in pairs:
        row = {
            "generated": generated,
            "reference": reference,
            "formula_accuracy": metrics_mod.formula_accuracy(generated, reference),
            "template_accuracy": metrics_mod.template_accuracy(generated, reference),
            "bleu": metrics_mod.bleu(generated, reference),
            "rouge_l": metrics_mod.rouge_l(generated, reference),
            "embedding_f1": metrics_mod.bert_style_score(generated, reference, provider),
        }
        if args.traces:
            try:
                sample = traces_mod.generate_traces(
                    reference, traces_mod.TraceConfig(count=args.traces, seed=args.seed)
                )
                row["semantic_robustness"] = traces_mod.semantic_robustness(
                    generated, reference, sample
                ).score
            except traces_mod.TraceGenerationError as exc:
                row["semantic_robustness"] = None
                row["robustness_note"] = str(exc)
        rows.append(row)

    metric_keys = [k for k in rows[0] if k not in ("generated", "reference", "robustness_note")]
    means = {
        k: sum(r[k] for r in rows if r.get(k) is not None)
        / max(sum(1 for r in rows if r.get(k) is not None), 1)
        for k in metric_keys
    }
    if args.format == "lines":
        for row in rows:
            print(json.dumps(row, ensure_ascii=False))
        print(json.dumps({"mean": means}, ensure_ascii=False))
    else:
        for i, row in enumerate(rows):
            scores = " ".join(
                f"{k}={row[k]:.4f}" for k in metric_keys if row.get(k) is not None
            )
            print(f"pair {i}: {scores}")
        print("mean: " + " ".join(f"{k}={v:.4f}" for k, v in means.items()))
    return 0


def _cmd_clarify(args) -> int:
    backend = _make_backend(args)
    vag, amb = _make_detectors(args, backend)
    if args.answers:
        with open(args.answers, "r", encoding="utf-8") as handle:
            answers = [line.rstrip("\n") for line in handle if line.strip()]
        source = clarify_mod.scripted_answers(answers)
    else:
        def source(query: clarify_mod.ClarificationQuery) -> str:
            print(f"[{query.stage}] {query.text}", file=sys.stderr)
            return input("> ")

    result = clarify_mod.run_session(
        args.requirement,
        vag,
        amb,
        backend,
        source,
        config=clarify_mod.SessionConfig(candidate_n=args.candidates),
    )
    if args.transcript:
        clarify_mod.export_transcript(args.transcript, result.transcript)
    if result.state.phase is not clarify_mod.Phase.DONE or result.formula is None:
        print(f"session {result.state.phase.value}: {result.error}", file=sys.stderr)
        return 1
    final = stl_printer.render(result.formula)
    obj = {
        "requirement": result.requirement.text,
        "formula": final,
        "rounds": len(result.requirement.revisions),
    }
    _emit(obj, args.format, [final])
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    fixture_data = None
    if args.backend == "scripted":
        if not args.fixture:
            raise CliError("scripted backend needs --fixture <path>")
        fixture_data = gateway_mod.load_fixture(args.fixture)

    def factory(text: str) -> clarify_mod.ClarificationSession:
        if args.backend == "remote":
            backend = gateway_mod.RemoteBackend()
        else:
            backend = gateway_mod.ScriptedBackend(fixture_data)
        vag, amb = _make_detectors(args, backend)
        return clarify_mod.ClarificationSession(
            text,
            vag,
            amb,
            backend,
            config=clarify_mod.SessionConfig(candidate_n=args.candidates),
        )

    app = create_app(factory)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


# --- argument wiring ----------------------------------------------------------


def build_arg_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(prog="clarifystl", description=__doc__)
    sub = root.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "lines"), default="text")

    p = sub.add_parser("parse", help="parse a formula and print its canonical form")
    p.add_argument("formula")
    add_format(p)
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("check", help="run the syntax checker")
    p.add_argument("formula")
    add_format(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("template", help="print the SIG/NUM template of a formula")
    p.add_argument("formula")
    add_format(p)
    p.set_defaults(func=_cmd_template)

    p = sub.add_parser("monitor", help="evaluate a formula on a stored trace")
    p.add_argument("--formula", required=True)
    p.add_argument("--trace", required=True, help="trace file, one JSON object per line")
    p.add_argument("--at", type=float, default=0.0)
    p.add_argument("--index", type=int, default=0)
    add_format(p)
    p.set_defaults(func=_cmd_monitor)

    p = sub.add_parser("mutate", help="build a mutated corpus from clean records")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--plan", required=True, help="e.g. Temporal=2,Numerical=1,Referential=1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("rule-only", "llm-assisted"), default="rule-only")
    p.add_argument("--lexicon")
    p.add_argument("--backend", choices=("scripted", "remote"), default="scripted")
    p.add_argument("--fixture")
    add_format(p)
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("train-ambiguity", help="train the ambiguity classifier")
    p.add_argument("--input", required=True, help="dataset records; ambiguous label = class 1")
    p.add_argument("--output", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--batch", type=int, default=16)
    p.add_argument("--lr", type=float, default=5e-5)
    p.add_argument("--margin", type=float, default=1.0)
    p.add_argument("--dropout", type=float, default=0.1)
    p.add_argument("--dim", type=int, default=256, help="hash embedding dimension")
    add_format(p)
    p.set_defaults(func=_cmd_train_ambiguity)

    p = sub.add_parser("detect", help="run a defect detector on one requirement")
    p.add_argument("--text", required=True)
    p.add_argument("--kind", choices=("vagueness", "ambiguity"), default="vagueness")
    p.add_argument("--mode", choices=("rule", "model", "scripted"), default="rule")
    p.add_argument("--model")
    p.add_argument("--lexicon")
    p.add_argument("--backend", choices=("scripted", "remote"), default="scripted")
    p.add_argument("--fixture")
    add_format(p)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("evaluate", help="score generated/reference formula pairs")
    p.add_argument("--pairs", required=True, help="JSONL with generated/reference fields")
    p.add_argument("--traces", type=int, default=0, help="trace count for semantic robustness")
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("clarify", help="run an interactive clarification session")
    p.add_argument("requirement")
    p.add_argument("--backend", choices=("scripted", "remote"), default="scripted")
    p.add_argument("--fixture")
    p.add_argument("--answers", help="file with one answer per line (scripted session)")
    p.add_argument("--detectors", choices=("rule", "scripted"), default="scripted")
    p.add_argument("--model", help="trained ambiguity model for rule/model detection")
    p.add_argument("--lexicon")
    p.add_argument("--candidates", type=int, default=3)
    p.add_argument("--transcript", help="write the event log here")
    add_format(p)
    p.set_defaults(func=_cmd_clarify)

    p = sub.add_parser("serve", help="host the session HTTP API")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--backend", choices=("scripted", "remote"), default="scripted")
    p.add_argument("--fixture")
    p.add_argument("--detectors", choices=("rule", "scripted"), default="scripted")
    p.add_argument("--model")
    p.add_argument("--lexicon")
    p.add_argument("--candidates", type=int, default=3)
    p.set_defaults(func=_cmd_serve)

    return root


_DOMAIN_ERRORS = (
    CliError,
    ValueError,
    RuntimeError,
    OSError,
    json.JSONDecodeError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
