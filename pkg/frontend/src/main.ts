import { ApiClient, ServiceError } from './api.js';
import type { CatalogResponse } from './api.js';
import { downloadText } from './export.js';
import { renderMatrixView } from './matrix.js';
import { renderDegenerate, renderErrorBanner, renderScenarioView } from './scenario.js';
import { breakevenBody, initialState, matrixBody, PlaygroundState } from './state.js';

export interface App {
  state: PlaygroundState;
  /** resolves when the most recently triggered request has settled */
  pending: Promise<void>;
  recompute: () => Promise<void>;
  root: HTMLElement;
}

function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === 'AbortError';
}

const CONTROLS = `
  <header class="controls">
    <label>model
      <select id="deployment"></select>
    </label>
    <label>API offering
      <select id="offering"></select>
    </label>
    <label>hours/day
      <input id="hours" type="range" min="1" max="24" step="1">
      <output id="hours-value"></output>
    </label>
    <label>days/month
      <input id="days" type="range" min="1" max="31" step="1">
      <output id="days-value"></output>
    </label>
    <label>electricity $/kWh
      <input id="rate" type="number" min="0" step="0.01">
    </label>
    <label>output share
      <input id="share" type="text" size="5">
    </label>
    <label>demand (tokens/mo, blank = capacity)
      <input id="demand" type="number" min="0" step="1000000" placeholder="capacity">
    </label>
    <label>GPU price override ($)
      <input id="gpu-price" type="number" min="0" step="100" placeholder="catalog">
    </label>
    <div class="buttons">
      <button type="button" id="view-toggle">matrix view</button>
      <button type="button" id="export-scenario" disabled>export series (CSV)</button>
      <button type="button" id="export-matrix" disabled>export matrix (JSON)</button>
    </div>
  </header>
  <main id="view-root" class="view"></main>`;

export function createApp(root: HTMLElement, client: ApiClient): App {
  const state = initialState();
  root.innerHTML = CONTROLS;
  const view = root.querySelector<HTMLElement>('#view-root')!;
  const pick = <T extends HTMLElement>(sel: string) => root.querySelector<T>(sel)!;

  const deploymentSelect = pick<HTMLSelectElement>('#deployment');
  const offeringSelect = pick<HTMLSelectElement>('#offering');
  const exportScenarioBtn = pick<HTMLButtonElement>('#export-scenario');
  const exportMatrixBtn = pick<HTMLButtonElement>('#export-matrix');
  const viewToggle = pick<HTMLButtonElement>('#view-toggle');

  let catalogNames = new Map<string, string>();

  function syncControls(): void {
    pick<HTMLInputElement>('#hours').value = state.hoursPerDay;
    pick<HTMLOutputElement>('#hours-value').value = state.hoursPerDay;
    pick<HTMLInputElement>('#days').value = state.daysPerMonth;
    pick<HTMLOutputElement>('#days-value').value = state.daysPerMonth;
    pick<HTMLInputElement>('#rate').value = state.electricityRate;
    pick<HTMLInputElement>('#share').value = state.outputShare;
    pick<HTMLInputElement>('#demand').value = state.demand;
    pick<HTMLInputElement>('#gpu-price').value = state.gpuPriceOverride;
    viewToggle.textContent = state.matrixView ? 'scenario view' : 'matrix view';
    exportScenarioBtn.disabled = state.lastResponse === null;
    exportMatrixBtn.disabled = state.lastMatrix === null;
  }

  async function recompute(): Promise<void> {
    state.error = null;
    state.degenerate = null;
    try {
      if (state.matrixView) {
        state.lastMatrix = await client.matrix(matrixBody(state));
        renderMatrixView(view, state.lastMatrix, catalogNames);
      } else {
        state.lastResponse = await client.breakeven(breakevenBody(state));
        renderScenarioView(view, state.lastResponse);
      }
    } catch (error) {
      if (isAbort(error)) {
        return; // superseded by a newer control change
      }
      if (error instanceof ServiceError && error.code === 'degenerate_scenario') {
        state.degenerate = error.scenario;
        renderDegenerate(view, error.message, error.scenario);
      } else {
        state.error = error instanceof Error ? error.message : String(error);
        renderErrorBanner(view, state.error);
        view.querySelector('#retry')?.addEventListener('click', () => trigger());
      }
    }
    syncControls();
  }

  const app: App = { state, pending: Promise.resolve(), recompute, root };

  function trigger(): Promise<void> {
    app.pending = recompute();
    return app.pending;
  }

  function bind(selector: string, apply: (value: string) => void): void {
    const input = pick<HTMLInputElement | HTMLSelectElement>(selector);
    input.addEventListener('change', () => {
      apply((input as HTMLInputElement).value);
      trigger(); // exactly one request per committed control change
    });
  }

  bind('#deployment', (v) => { state.deploymentId = v; });
  bind('#offering', (v) => { state.offeringId = v; });
  bind('#hours', (v) => { state.hoursPerDay = v; });
  bind('#days', (v) => { state.daysPerMonth = v; });
  bind('#rate', (v) => { state.electricityRate = v; });
  bind('#share', (v) => { state.outputShare = v; });
  bind('#demand', (v) => { state.demand = v; });
  bind('#gpu-price', (v) => { state.gpuPriceOverride = v; });

  viewToggle.addEventListener('click', () => {
    state.matrixView = !state.matrixView;
    trigger();
  });

  exportScenarioBtn.addEventListener('click', () => {
    app.pending = (async () => {
      const text = await client.curvesCsv(breakevenBody(state));
      downloadText(`${state.deploymentId}-vs-${state.offeringId}-curves.csv`,
                   text, 'text/csv');
    })();
  });

  exportMatrixBtn.addEventListener('click', () => {
    app.pending = (async () => {
      const text = await client.matrixText(matrixBody(state));
      downloadText('breakeven-matrix.json', text, 'application/json');
    })();
  });

  app.pending = (async () => {
    try {
      const catalog: CatalogResponse = await client.catalog();
      catalogNames = new Map([
        ...catalog.deployments.map((d) => [d.id, d.name] as const),
        ...catalog.offerings.map((o) => [o.id, o.name] as const),
      ]);
      deploymentSelect.innerHTML = catalog.deployments
        .map((d) => `<option value="${d.id}">${d.name}</option>`).join('');
      offeringSelect.innerHTML = catalog.offerings
        .map((o) => `<option value="${o.id}">${o.name}</option>`).join('');
      deploymentSelect.value = state.deploymentId;
      offeringSelect.value = state.offeringId;
    } catch {
      // selects stay empty; the first recompute surfaces the error banner
    }
    syncControls();
    await recompute();
  })();

  return app;
}

declare global {
  interface Window { LLM_TCO_BASE_URL?: string }
}

export function bootstrap(): void {
  const base = window.LLM_TCO_BASE_URL
    ?? new URLSearchParams(window.location.search).get('service')
    ?? 'http://127.0.0.1:8080';
  const root = document.getElementById('app');
  if (root !== null) {
    createApp(root, new ApiClient(base));
  }
}

if (typeof document !== 'undefined' && document.getElementById('app') !== null) {
  bootstrap();
}
