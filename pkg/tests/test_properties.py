"""Property suites for the cost identities and the break-even solver."""

from dataclasses import replace
from decimal import Decimal as D
from fractions import Fraction as F

from hypothesis import assume, given, settings, strategies as st

from llm_tco.breakeven import Status, solve_break_even
from llm_tco.catalog import ApiOffering, Catalog, DeploymentSpec, GpuSku, load_catalog, serialize_catalog
from llm_tco.engine import (
    WorkloadProfile,
    api_cumulative_cost,
    api_monthly_cost,
    electricity_monthly,
    local_cumulative_cost,
    monthly_capacity,
    required_replicas,
)
from llm_tco.money import as_fraction


def decimals(lo, hi, places=2):
    return st.decimals(min_value=lo, max_value=hi, places=places,
                       allow_nan=False, allow_infinity=False)


gpu_skus = st.builds(
    GpuSku,
    id=st.just("gpu"),
    name=st.just("GPU"),
    vram=decimals("1", "200", 0),
    rated_power=decimals("50", "1500", 0),
    accounting_power=decimals("50", "1500", 0),
    unit_price=decimals("100", "100000"),
)

deployment_specs = st.builds(
    DeploymentSpec,
    id=st.just("dep"),
    name=st.just("Dep"),
    size_class=st.sampled_from(["Large", "Medium", "Small"]),
    is_moe=st.booleans(),
    total_params=st.just(D(100)),
    active_params=st.just(D(10)),
    vram_required=st.just(D(1)),
    gpu_sku=gpu_skus,
    gpu_count=st.integers(1, 64),
    throughput=decimals("1", "5000", 0),
    scores=st.just({}),
)

offerings = st.builds(
    ApiOffering,
    id=st.just("api"),
    name=st.just("API"),
    provider=st.just("Provider"),
    input_price=decimals("0", "50"),
    output_price=decimals("0", "200"),
    accounting_output_price=decimals("0.01", "200"),
    scores=st.just({}),
)

workloads = st.builds(
    WorkloadProfile,
    hours_per_day=decimals("1", "24", 1),
    days_per_month=decimals("1", "31", 0),
    electricity_rate=decimals("0", "1"),
    output_share=st.fractions(F(1, 100), F(99, 100), max_denominator=100),
    demand=st.none(),
)

# hundredth shares keep every blended cost a finite decimal, so no value
# ever lands on the micro-dollar rounding boundary
percent_shares = st.integers(1, 99).map(lambda n: F(n, 100))

busy_workloads = st.builds(
    WorkloadProfile,
    hours_per_day=decimals("4", "24", 1),
    days_per_month=decimals("5", "31", 0),
    electricity_rate=decimals("0", "1"),
    output_share=percent_shares,
    demand=st.none(),
)

busy_specs = st.builds(
    DeploymentSpec,
    id=st.just("dep"),
    name=st.just("Dep"),
    size_class=st.just("Large"),
    is_moe=st.booleans(),
    total_params=st.just(D(100)),
    active_params=st.just(D(10)),
    vram_required=st.just(D(1)),
    gpu_sku=gpu_skus,
    gpu_count=st.integers(1, 64),
    throughput=decimals("50", "5000", 0),
    scores=st.just({}),
)

months = decimals("0", "240", 6)


@settings(max_examples=300, deadline=None)
@given(spec=deployment_specs, offering=offerings, w=workloads)
def test_break_even_residual_under_one_ppm(spec, offering, w):
    """At the solved crossing the two cumulative costs agree to 1e-6 relative."""
    result = solve_break_even(spec, offering, w)
    assume(result.status is Status.BREAKS_EVEN)
    local = local_cumulative_cost(spec, w, result.t_star)
    api = api_cumulative_cost(offering, result.capacity, w.output_share, result.t_star)
    assert abs(local - api) <= D("0.000001") * api


@settings(max_examples=200, deadline=None)
@given(spec=deployment_specs, offering=offerings, w=busy_workloads,
       lam=st.sampled_from([D("0.5"), D(2), D(10)]))
def test_t_star_scale_invariance(spec, offering, w, lam):
    """Scaling every price by the same factor moves both curves together."""
    base = solve_break_even(spec, offering, w)
    assume(base.status is Status.BREAKS_EVEN)
    scaled = solve_break_even(
        replace(spec, gpu_sku=replace(spec.gpu_sku, unit_price=spec.gpu_sku.unit_price * lam)),
        replace(offering,
                input_price=offering.input_price * lam,
                output_price=offering.output_price * lam,
                accounting_output_price=offering.accounting_output_price * lam),
        replace(w, electricity_rate=w.electricity_rate * lam),
    )
    assert scaled.status is Status.BREAKS_EVEN
    assert scaled.t_star == base.t_star


@settings(max_examples=200, deadline=None)
@given(spec=deployment_specs, offering=offerings, w=workloads,
       bump=decimals("0.01", "10000"))
def test_t_star_strictly_increasing_in_hardware_price(spec, offering, w, bump):
    base = solve_break_even(spec, offering, w)
    assume(base.status is Status.BREAKS_EVEN)
    pricier = replace(spec, gpu_sku=replace(
        spec.gpu_sku, unit_price=spec.gpu_sku.unit_price + bump))
    bumped = solve_break_even(pricier, offering, w)
    assert bumped.t_star > base.t_star


@settings(max_examples=200, deadline=None)
@given(spec=busy_specs, offering=offerings, w=busy_workloads,
       bump=decimals("0.01", "100"))
def test_t_star_strictly_decreasing_in_api_prices(spec, offering, w, bump):
    base = solve_break_even(spec, offering, w)
    assume(base.status is Status.BREAKS_EVEN)
    for field in ("input_price", "accounting_output_price"):
        dearer = replace(offering, **{field: getattr(offering, field) + bump})
        moved = solve_break_even(spec, dearer, w)
        assert moved.status is Status.BREAKS_EVEN
        assert moved.t_star < base.t_star


@settings(max_examples=300, deadline=None)
@given(spec=deployment_specs, w=workloads, t1=months, t2=months)
def test_local_cost_linearity_is_exact(spec, w, t1, t2):
    """Cost growth between two times is electricity times the gap, exactly."""
    lo, hi = sorted([t1, t2])
    grown = local_cumulative_cost(spec, w, hi) - local_cumulative_cost(spec, w, lo)
    assert grown == electricity_monthly(spec, w) * (hi - lo)


@settings(max_examples=300, deadline=None)
@given(spec=deployment_specs, w=workloads)
def test_capacity_doubles_with_throughput_and_hours(spec, w):
    cap = as_fraction(monthly_capacity(spec, w))
    double_tput = replace(spec, throughput=spec.throughput * 2)
    assert as_fraction(monthly_capacity(double_tput, w)) == cap * 2
    assume(w.hours_per_day <= 12)
    double_hours = replace(w, hours_per_day=w.hours_per_day * 2)
    assert as_fraction(monthly_capacity(spec, double_hours)) == cap * 2


@settings(max_examples=300, deadline=None)
@given(offering=offerings, q=st.integers(0, 10**10), share=percent_shares)
def test_api_cost_monotone_in_volume_and_prices(offering, q, share):
    assume(offering.accounting_output_price >= offering.input_price)
    base = api_monthly_cost(offering, q, share)
    assert api_monthly_cost(offering, q + 10**6, share) >= base
    pricier = replace(offering, input_price=offering.input_price + 1)
    assert api_monthly_cost(pricier, q, share) >= base
    pricier = replace(offering, accounting_output_price=offering.accounting_output_price + 1)
    assert api_monthly_cost(pricier, q, share) >= base
    richer_share = share + F(99, 100) * (1 - share)
    assert api_monthly_cost(offering, q, richer_share) >= base


def test_eq4_literal_form_when_q_divisible_by_three(catalog):
    """At a 1:2 input:output mix the blended cost is the literal two-term sum."""
    off = catalog.offering("gpt-5")
    q = 114_048_000
    literal = (D(q) / 3 * off.input_price / 10**6
               + 2 * D(q) / 3 * off.accounting_output_price / 10**6)
    assert api_monthly_cost(off, q, F(2, 3)) == literal


@settings(max_examples=200, deadline=None)
@given(spec=deployment_specs, w=workloads, k=st.integers(1, 50))
def test_replica_count_ceiling(spec, w, k):
    cap = monthly_capacity(spec, w)
    assume(as_fraction(cap).denominator == 1)
    assert required_replicas(spec, w, int(cap) * k) == k


@settings(max_examples=100, deadline=None)
@given(spec=deployment_specs, offering=offerings, w=workloads)
def test_price_equality_gives_identical_results(spec, offering, w):
    """Two offerings with the same effective prices break even identically."""
    twin = replace(offering, id="api-twin", name="API Twin")
    a = solve_break_even(spec, offering, w)
    b = solve_break_even(spec, twin, w)
    assert a.t_star == b.t_star
    assert a.status == b.status


@settings(max_examples=100, deadline=None)
@given(gpus=st.lists(gpu_skus, min_size=1, max_size=3),
       specs=st.lists(deployment_specs, min_size=0, max_size=3),
       offers=st.lists(offerings, min_size=0, max_size=3),
       scores=st.dictionaries(
           st.sampled_from(["GPQA", "MATH-500", "LiveCodeBench", "MMLU-Pro"]),
           decimals("0", "100", 1), max_size=4))
def test_catalog_round_trip_with_generated_records(gpus, specs, offers, scores):
    unique_gpus = tuple(replace(g, id=f"gpu-{i}") for i, g in enumerate(gpus))
    unique_specs = tuple(
        replace(s, id=f"dep-{i}", gpu_sku=unique_gpus[0],
                vram_required=unique_gpus[0].vram, scores=dict(scores))
        for i, s in enumerate(specs))
    unique_offers = tuple(replace(o, id=f"api-{i}", scores=dict(scores))
                          for i, o in enumerate(offers))
    cat = Catalog(schema_version=1, gpus=unique_gpus,
                  deployments=unique_specs, offerings=unique_offers)
    assert load_catalog(serialize_catalog(cat)) == cat
