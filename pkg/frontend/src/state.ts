import type { BreakevenResponse, MatrixResponse } from './api.js';

/** Everything the playground remembers between renders. */
export interface PlaygroundState {
  deploymentId: string;
  offeringId: string;
  hoursPerDay: string;
  daysPerMonth: string;
  electricityRate: string;
  outputShare: string;
  demand: string;           // empty = run at capacity
  gpuPriceOverride: string; // empty = catalog price
  matrixView: boolean;
  lastResponse: BreakevenResponse | null;
  lastMatrix: MatrixResponse | null;
  error: string | null;
  degenerate: BreakevenResponse['scenario'] | null;
}

export const DEFAULTS = {
  hoursPerDay: '8',
  daysPerMonth: '22',
  electricityRate: '0.15',
  outputShare: '2/3',
} as const;

export function initialState(): PlaygroundState {
  return {
    deploymentId: 'qwen3-30b',
    offeringId: 'gpt-5',
    hoursPerDay: DEFAULTS.hoursPerDay,
    daysPerMonth: DEFAULTS.daysPerMonth,
    electricityRate: DEFAULTS.electricityRate,
    outputShare: DEFAULTS.outputShare,
    demand: '',
    gpuPriceOverride: '',
    matrixView: false,
    lastResponse: null,
    lastMatrix: null,
    error: null,
    degenerate: null,
  };
}

/** Workload overrides as the service expects them; numbers stay strings
 * end to end so nothing is re-rounded on the way. */
export function workloadBody(state: PlaygroundState): Record<string, unknown> {
  const workload: Record<string, unknown> = {
    hours_per_day: state.hoursPerDay,
    days_per_month: state.daysPerMonth,
    electricity_rate: state.electricityRate,
    output_share: state.outputShare,
  };
  if (state.demand !== '') {
    workload.demand = Number(state.demand);
  }
  return workload;
}

export function breakevenBody(state: PlaygroundState): Record<string, unknown> {
  const body: Record<string, unknown> = {
    model_id: state.deploymentId,
    api_id: state.offeringId,
    workload: workloadBody(state),
  };
  if (state.gpuPriceOverride !== '') {
    body.gpu_unit_price = state.gpuPriceOverride;
  }
  return body;
}

export function matrixBody(state: PlaygroundState): Record<string, unknown> {
  return { workload: workloadBody(state) };
}
