"""Bundled reference catalog.

A snapshot of August-2025 list prices and deployment figures for nine
open-weight models on two GPU SKUs against five commercial API offerings.
Two kinds of values appear side by side:

- listed values: taken verbatim from vendor spec sheets and price pages
  (rated_power, output_price);
- accounting values: the figures the published capacity/break-even tables
  were actually computed with (accounting_power, accounting_output_price).
  Where the two disagree, the accounting value is the one that reproduces
  the reference tables cent for cent, so the engine uses it.

The same catalog ships as data/paper_catalog.json; a test keeps the two in
sync.
"""

from __future__ import annotations

from decimal import Decimal as D

from .catalog import ApiOffering, Catalog, DeploymentSpec, GpuSku, SCHEMA_VERSION

_A100 = GpuSku(
    id="a100-80gb",
    name="NVIDIA A100-80GB",
    vram=D(80),
    rated_power=D(400),
    accounting_power=D(300),
    unit_price=D("15000.00"),
)

_RTX5090 = GpuSku(
    id="rtx-5090",
    name="NVIDIA RTX 5090-32GB",
    vram=D(32),
    rated_power=D(575),
    accounting_power=D(500),
    unit_price=D("2000.00"),
)


def _dep(id, name, size_class, is_moe, total, active, vram, gpu, count, tput, scores):
    return DeploymentSpec(
        id=id, name=name, size_class=size_class, is_moe=is_moe,
        total_params=D(str(total)), active_params=D(str(active)),
        vram_required=D(str(vram)), gpu_sku=gpu, gpu_count=count,
        throughput=D(str(tput)),
        scores={b: D(str(s)) for b, s in scores.items()},
    )


_DEPLOYMENTS = (
    _dep("kimi-k2", "Kimi-K2", "Large", True, 1000, 32, 1000, _A100, 16, 800,
         {"GPQA": 76.6, "MATH-500": 97.1, "LiveCodeBench": 55.6, "MMLU-Pro": 82.4}),
    _dep("glm-4.5", "GLM-4.5", "Large", True, 355, 32, 355, _A100, 6, 400,
         {"GPQA": 78.2, "MATH-500": 97.9, "LiveCodeBench": 73.8, "MMLU-Pro": 83.5}),
    _dep("qwen3-235b", "Qwen3-235B", "Large", True, 235, 22, 235, _A100, 4, 400,
         {"GPQA": 79.0, "MATH-500": 98.4, "LiveCodeBench": 78.8, "MMLU-Pro": 84.3}),
    # throughputs for the two mid-size models follow the capacity table,
    # which the hardware table contradicts (it swaps them)
    _dep("gpt-oss-120b", "gpt-oss-120B", "Medium", True, 117, 5.1, 120, _A100, 2, 220,
         {"GPQA": 78.2, "LiveCodeBench": 63.9, "MMLU-Pro": 80.8}),
    _dep("glm-4.5-air", "GLM-4.5-Air", "Medium", True, 106, 12, 106, _A100, 2, 200,
         {"GPQA": 73.3, "MATH-500": 96.5, "LiveCodeBench": 68.4, "MMLU-Pro": 81.5}),
    _dep("llama-3.3-70b", "Llama-3.3-70B", "Medium", False, 70, 70, 70, _A100, 1, 190,
         {"GPQA": 49.8, "MATH-500": 77.3, "LiveCodeBench": 28.8, "MMLU-Pro": 71.3}),
    _dep("exaone-32b", "EXAONE 4.0 32B", "Small", False, 32, 32, 32, _RTX5090, 1, 200,
         {"GPQA": 73.9, "MATH-500": 97.7, "LiveCodeBench": 74.7, "MMLU-Pro": 81.8}),
    _dep("qwen3-30b", "Qwen3-30B", "Small", False, 30, 30, 30, _RTX5090, 1, 180,
         {"GPQA": 70.7, "MATH-500": 97.6, "LiveCodeBench": 70.7, "MMLU-Pro": 80.5}),
    _dep("magistral-small", "Magistral Small", "Small", False, 24, 24, 24, _RTX5090, 1, 150,
         {"GPQA": 64.1, "MATH-500": 96.3, "LiveCodeBench": 51.4, "MMLU-Pro": 74.6}),
)


def _offering(id, provider, name, inp, out, acct_out, scores):
    return ApiOffering(
        id=id, provider=provider, name=name,
        input_price=D(inp), output_price=D(out),
        accounting_output_price=D(acct_out),
        scores={b: D(str(s)) for b, s in scores.items()},
    )


_OFFERINGS = (
    _offering("gpt-5", "OpenAI", "GPT-5", "1.25", "10.00", "10.00",
              {"GPQA": 85.4, "MATH-500": 99.4, "LiveCodeBench": 66.8, "MMLU-Pro": 87.1}),
    _offering("claude-4-opus", "Anthropic", "Claude-4 Opus", "15.00", "75.00", "75.00",
              {"GPQA": 70.1, "MATH-500": 94.1, "LiveCodeBench": 54.2, "MMLU-Pro": 86.0}),
    _offering("claude-4-sonnet", "Anthropic", "Claude-4 Sonnet", "3.00", "15.00", "15.00",
              {"GPQA": 68.3, "MATH-500": 93.4, "LiveCodeBench": 44.9, "MMLU-Pro": 83.7}),
    _offering("grok-4", "xAI", "Grok-4", "3.00", "15.00", "15.00",
              {"GPQA": 87.7, "MATH-500": 99.0, "LiveCodeBench": 81.9, "MMLU-Pro": 86.6}),
    _offering("gemini-2.5-pro", "Google", "Gemini 2.5 Pro", "1.25", "10.00", "11.00",
              {"GPQA": 84.4, "MATH-500": 96.7, "LiveCodeBench": 80.1, "MMLU-Pro": 86.2}),
)

_BUILTIN = Catalog(
    schema_version=SCHEMA_VERSION,
    gpus=(_A100, _RTX5090),
    deployments=_DEPLOYMENTS,
    offerings=_OFFERINGS,
)


def builtin_catalog() -> Catalog:
    """The compiled-in reference catalog (immutable; shared instance)."""
    return _BUILTIN
