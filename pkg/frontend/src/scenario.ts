import type { BreakevenResponse, CurvesDoc, ScenarioDoc } from './api.js';

/**
 * Scenario view: cumulative-cost chart, break-even badge, monthly cost
 * breakdown, and per-benchmark gap chips. Every number shown is a field
 * from the service response; parsing to float happens only to place SVG
 * geometry.
 */

const WIDTH = 640;
const HEIGHT = 280;
const PAD = { left: 56, right: 16, top: 12, bottom: 28 };

function escapeHtml(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function polyline(points: Array<[number, number]>): string {
  return points.map(([x, y]) => `${x.toFixed(1)},${y.toFixed(1)}`).join(' ');
}

export function renderChart(curves: CurvesDoc, markerLabel: string | null): string {
  const ts = curves.points.map((p) => p.t);
  const locals = curves.points.map((p) => parseFloat(p.local_cost));
  const apis = curves.points.map((p) => parseFloat(p.api_cost));
  const tMax = Math.max(...ts, 1);
  const yMax = Math.max(...locals, ...apis, 1);

  const x = (t: number) => PAD.left + (t / tMax) * (WIDTH - PAD.left - PAD.right);
  const y = (v: number) => HEIGHT - PAD.bottom - (v / yMax) * (HEIGHT - PAD.top - PAD.bottom);

  // local cost steps up to the hardware outlay at t=0, then grows linearly
  const localPts: Array<[number, number]> = [[x(0), y(0)], [x(0), y(locals[0])]];
  curves.points.forEach((p, i) => localPts.push([x(p.t), y(locals[i])]));
  const apiPts: Array<[number, number]> = curves.points.map((p, i) => [x(p.t), y(apis[i])]);

  let marker = '';
  if (curves.break_even_marker !== null) {
    const mx = x(parseFloat(curves.break_even_marker));
    marker = `
      <line class="marker" x1="${mx.toFixed(1)}" y1="${y(yMax).toFixed(1)}"
            x2="${mx.toFixed(1)}" y2="${(HEIGHT - PAD.bottom).toFixed(1)}"
            stroke-dasharray="4 3"/>
      <text class="marker-label" x="${(mx + 4).toFixed(1)}" y="${(PAD.top + 12).toFixed(1)}">
        ${escapeHtml(markerLabel ?? curves.break_even_marker)} mo</text>`;
  }

  const axis = `
    <line class="axis" x1="${PAD.left}" y1="${HEIGHT - PAD.bottom}"
          x2="${WIDTH - PAD.right}" y2="${HEIGHT - PAD.bottom}"/>
    <line class="axis" x1="${PAD.left}" y1="${PAD.top}"
          x2="${PAD.left}" y2="${HEIGHT - PAD.bottom}"/>
    <text class="axis-label" x="${WIDTH / 2}" y="${HEIGHT - 6}">months</text>`;

  return `
  <svg viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" aria-label="cumulative cost curves">
    ${axis}
    <polyline class="line-local" fill="none" points="${polyline(localPts)}"/>
    <polyline class="line-api" fill="none" points="${polyline(apiPts)}"/>
    ${marker}
  </svg>`;
}

function gapChips(scenario: ScenarioDoc): string {
  if (scenario.gap === null) {
    return '<p class="muted">no shared benchmarks</p>';
  }
  const chips = Object.entries(scenario.gap.per_benchmark)
    .map(([bench, delta]) =>
      `<span class="chip" data-bench="${escapeHtml(bench)}">` +
      `${escapeHtml(bench)} ${escapeHtml(delta)}</span>`)
    .join('');
  const mean = scenario.display.mean_gap;
  return `${chips}<span class="chip chip-mean">mean ${escapeHtml(mean ?? '')}</span>`;
}

function tierBadge(scenario: ScenarioDoc): string {
  const tier = scenario.display.tier;
  if (tier === null) {
    return `<span class="badge tier-never">never breaks even</span>`;
  }
  return `<span class="badge tier-${tier.toLowerCase()}">${escapeHtml(tier)}</span>`;
}

export function renderScenarioView(root: HTMLElement, response: BreakevenResponse): void {
  const scenario = response.scenario;
  root.innerHTML = `
    <div class="scenario">
      <div class="scenario-headline">
        <span class="t-star" data-field="t-star">${escapeHtml(scenario.display.t_star)}</span>
        <span class="t-star-unit">months to break even</span>
        ${tierBadge(scenario)}
      </div>
      <div class="chart">${renderChart(response.curves, scenario.display.t_star)}</div>
      <dl class="breakdown">
        <dt>hardware outlay</dt><dd data-field="hardware">$${escapeHtml(scenario.hardware)}</dd>
        <dt>electricity / month</dt>
        <dd data-field="electricity">$${escapeHtml(scenario.monthly_electricity)}</dd>
        <dt>equivalent API spend / month</dt>
        <dd data-field="api-cost">$${escapeHtml(scenario.monthly_api_cost)}</dd>
        <dt>token capacity / month</dt>
        <dd data-field="capacity">${scenario.capacity_tokens_per_month.toLocaleString('en-US')}</dd>
        <dt>replicas</dt><dd data-field="replicas">${scenario.replicas}</dd>
      </dl>
      <div class="gaps" data-field="gaps">${gapChips(scenario)}</div>
    </div>`;
}

/** Degenerate scenarios come back as 422 with the zero-cost scenario
 * attached; explain them instead of charting. */
export function renderDegenerate(root: HTMLElement, message: string,
                                 scenario: ScenarioDoc | null): void {
  const costs = scenario === null ? '' : `
    <dl class="breakdown">
      <dt>hardware outlay</dt><dd data-field="hardware">$${escapeHtml(scenario.hardware)}</dd>
      <dt>electricity / month</dt>
      <dd data-field="electricity">$${escapeHtml(scenario.monthly_electricity)}</dd>
      <dt>equivalent API spend / month</dt>
      <dd data-field="api-cost">$${escapeHtml(scenario.monthly_api_cost)}</dd>
      <dt>replicas</dt><dd data-field="replicas">${scenario.replicas}</dd>
    </dl>`;
  root.innerHTML = `
    <div class="degenerate" data-field="degenerate">
      <p>${escapeHtml(message)}</p>
      ${costs}
    </div>`;
}

export function renderErrorBanner(root: HTMLElement, message: string): void {
  root.innerHTML = `
    <div class="error-banner" data-field="error">
      <span>${escapeHtml(message)}</span>
      <button type="button" id="retry">retry</button>
    </div>`;
}
