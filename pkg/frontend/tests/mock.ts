/** Scriptable fetch stand-in: routes by path, counts calls, honors abort. */

import type {
  BreakevenResponse,
  CatalogResponse,
  FetchLike,
  MatrixResponse,
  ScenarioDoc,
} from '../src/api.js';

export interface MockRoute {
  status?: number;
  body: unknown;
  delayMs?: number;
}

export interface MockService {
  fetchFn: FetchLike;
  calls: Array<{ path: string; body: unknown }>;
  routes: Map<string, MockRoute>;
}

export function mockService(routes: Record<string, MockRoute>): MockService {
  const service: MockService = {
    calls: [],
    routes: new Map(Object.entries(routes)),
    fetchFn: async (input, init) => {
      const path = new URL(input, 'http://mock').pathname;
      const body = init?.body ? JSON.parse(String(init.body)) : null;
      service.calls.push({ path, body });
      const route = service.routes.get(path);
      if (route === undefined) {
        return new Response(JSON.stringify({ error: { code: 'not_found', message: path } }),
                            { status: 404, headers: { 'content-type': 'application/json' } });
      }
      if (route.delayMs) {
        await new Promise<void>((resolve, reject) => {
          const timer = setTimeout(resolve, route.delayMs);
          init?.signal?.addEventListener('abort', () => {
            clearTimeout(timer);
            reject(new DOMException('aborted', 'AbortError'));
          });
        });
      }
      if (init?.signal?.aborted) {
        throw new DOMException('aborted', 'AbortError');
      }
      return new Response(JSON.stringify(route.body), {
        status: route.status ?? 200,
        headers: { 'content-type': 'application/json' },
      });
    },
  };
  return service;
}

export function sentinelScenario(overrides: Partial<ScenarioDoc> = {}): ScenarioDoc {
  return {
    deployment_id: 'qwen3-30b',
    offering_id: 'gpt-5',
    status: 'breaks_even',
    t_star: '41.999001',
    tier: 'strategic',
    hardware: '31337.77',
    monthly_electricity: '271.82',
    monthly_api_cost: '16180.33',
    capacity_tokens_per_month: 123456789,
    replicas: 6,
    zero_hardware: false,
    gap: {
      per_benchmark: { GPQA: '-12.5', 'MMLU-Pro': '99.9' },
      mean_delta: '43.7',
    },
    display: { t_star: 'SENTINEL-42.0', tier: 'SentinelTier', mean_gap: '+86.75%' },
    ...overrides,
  };
}

export function sentinelBreakeven(): BreakevenResponse {
  return {
    schema_version: 1,
    workload: {
      hours_per_day: 8, days_per_month: 22, hours_per_month: 176,
      electricity_rate: '0.15', output_share: '2/3', demand: null,
    },
    scenario: sentinelScenario(),
    curves: {
      deployment_id: 'qwen3-30b',
      offering_id: 'gpt-5',
      horizon: 12,
      step: 1,
      break_even_marker: '3.5',
      points: [
        { t: 0, local_cost: '31337.77', api_cost: '0.00' },
        { t: 6, local_cost: '32968.69', api_cost: '97081.98' },
        { t: 12, local_cost: '34599.61', api_cost: '194163.96' },
      ],
    },
  };
}

const TIER_CYCLE = ['rapid', 'strategic', 'challenging', null] as const;

export function sentinelMatrix(): MatrixResponse {
  const deployments = Array.from({ length: 9 }, (_, i) => `dep-${i}`);
  const offerings = Array.from({ length: 5 }, (_, i) => `api-${i}`);
  return {
    schema_version: 1,
    workload: {
      hours_per_day: 8, days_per_month: 22, hours_per_month: 176,
      electricity_rate: '0.15', output_share: '2/3', demand: null,
    },
    deployment_ids: deployments,
    offering_ids: offerings,
    rows: deployments.map((dep, i) => ({
      deployment_id: dep,
      cells: offerings.map((off, j) => {
        const tier = TIER_CYCLE[(i + j) % TIER_CYCLE.length];
        return sentinelScenario({
          deployment_id: dep,
          offering_id: off,
          tier,
          display: {
            t_star: `T-${i}-${j}`,
            tier: tier === null ? null : tier[0].toUpperCase() + tier.slice(1),
            mean_gap: `+${i}.${j}0%`,
          },
        });
      }),
      t_star_range: { min: '1', max: '2' },
      display_range: `R-${i}`,
    })),
  };
}

export function tinyCatalog(): CatalogResponse {
  return {
    schema_version: 1,
    gpus: [{ id: 'gpu-1', name: 'GPU One', unit_price: '1000.00' }],
    deployments: [
      { id: 'qwen3-30b', name: 'Qwen3-30B', size_class: 'Small', gpu_sku: 'gpu-1', gpu_count: 1 },
      { id: 'kimi-k2', name: 'Kimi-K2', size_class: 'Large', gpu_sku: 'gpu-1', gpu_count: 16 },
    ],
    offerings: [
      { id: 'gpt-5', provider: 'OpenAI', name: 'GPT-5' },
      { id: 'claude-4-opus', provider: 'Anthropic', name: 'Claude-4 Opus' },
    ],
  };
}
