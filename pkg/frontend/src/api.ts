/**
 * Typed client for the cost service. The playground displays what the
 * service returns and computes nothing itself, so every response field
 * that reaches the screen is carried through verbatim.
 */

export interface WorkloadDoc {
  hours_per_day: number;
  days_per_month: number;
  hours_per_month: number;
  electricity_rate: string;
  output_share: string;
  demand: number | null;
}

export interface GapDoc {
  per_benchmark: Record<string, string>;
  mean_delta: string;
}

export interface DisplayBlock {
  t_star: string;
  tier: string | null;
  mean_gap: string | null;
}

export interface ScenarioDoc {
  deployment_id: string;
  offering_id: string;
  status: 'immediate' | 'breaks_even' | 'never';
  t_star: string | null;
  tier: string | null;
  hardware: string;
  monthly_electricity: string;
  monthly_api_cost: string;
  capacity_tokens_per_month: number;
  replicas: number;
  zero_hardware: boolean;
  gap: GapDoc | null;
  display: DisplayBlock;
}

export interface CurvePoint {
  t: number;
  local_cost: string;
  api_cost: string;
}

export interface CurvesDoc {
  deployment_id: string;
  offering_id: string;
  horizon: number;
  step: number;
  break_even_marker: string | null;
  points: CurvePoint[];
}

export interface BreakevenResponse {
  schema_version: number;
  workload: WorkloadDoc;
  scenario: ScenarioDoc;
  curves: CurvesDoc;
}

export interface MatrixRowDoc {
  deployment_id: string;
  cells: ScenarioDoc[];
  t_star_range: { min: string; max: string } | null;
  display_range: string;
}

export interface MatrixResponse {
  schema_version: number;
  workload: WorkloadDoc;
  deployment_ids: string[];
  offering_ids: string[];
  rows: MatrixRowDoc[];
}

export interface CatalogGpu {
  id: string;
  name: string;
  unit_price: string;
}

export interface CatalogDeployment {
  id: string;
  name: string;
  size_class: string;
  gpu_sku: string;
  gpu_count: number;
}

export interface CatalogOffering {
  id: string;
  provider: string;
  name: string;
}

export interface CatalogResponse {
  schema_version: number;
  gpus: CatalogGpu[];
  deployments: CatalogDeployment[];
  offerings: CatalogOffering[];
}

export interface ErrorBody {
  error: { code: string; message: string; field?: string };
  scenario?: ScenarioDoc;
}

/** Raised for non-2xx responses that carry a structured error body. */
export class ServiceError extends Error {
  readonly status: number;
  readonly code: string;
  readonly scenario: ScenarioDoc | null;

  constructor(status: number, body: ErrorBody) {
    super(body.error.message);
    this.status = status;
    this.code = body.error.code;
    this.scenario = body.scenario ?? null;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  baseUrl: string;
  private readonly fetchFn: FetchLike;
  private inflight: AbortController | null = null;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, '');
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  async catalog(): Promise<CatalogResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/api/v1/catalog`);
    return (await response.json()) as CatalogResponse;
  }

  /**
   * Solve one scenario. A newer call aborts any in-flight one, so the
   * latest control change always wins.
   */
  async breakeven(body: Record<string, unknown>): Promise<BreakevenResponse> {
    return (await this.post('/api/v1/breakeven', body, true)) as BreakevenResponse;
  }

  async matrix(body: Record<string, unknown>): Promise<MatrixResponse> {
    return (await this.post('/api/v1/matrix', body, false)) as MatrixResponse;
  }

  /** Lossless CSV of the scenario's cost-curve series, for export. */
  async curvesCsv(body: Record<string, unknown>): Promise<string> {
    const response = await this.fetchFn(`${this.baseUrl}/api/v1/breakeven`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ ...body, format: 'csv' }),
    });
    if (!response.ok) {
      throw new ServiceError(response.status, (await response.json()) as ErrorBody);
    }
    return await response.text();
  }

  /** Raw matrix document text, for export. */
  async matrixText(body: Record<string, unknown>): Promise<string> {
    const response = await this.fetchFn(`${this.baseUrl}/api/v1/matrix`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new ServiceError(response.status, (await response.json()) as ErrorBody);
    }
    return await response.text();
  }

  private async post(
    path: string,
    body: Record<string, unknown>,
    cancelPrevious: boolean,
  ): Promise<unknown> {
    let signal: AbortSignal | undefined;
    if (cancelPrevious) {
      this.inflight?.abort();
      this.inflight = new AbortController();
      signal = this.inflight.signal;
    }
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
      signal,
    });
    if (!response.ok) {
      throw new ServiceError(response.status, (await response.json()) as ErrorBody);
    }
    return await response.json();
  }
}
