import type { ClustersResponse, Verdict, VoteResponse } from './types';

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

async function parseFailure(response: Response): Promise<ApiError> {
  let detail = `HTTP ${response.status}`;
  try {
    const body = await response.json();
    if (body && typeof body.detail === 'string') detail = body.detail;
  } catch {
    /* body was not JSON; keep the status line */
  }
  return new ApiError(detail, response.status);
}

export async function fetchClusters(
  date: string,
  lang: string,
  limit = 10,
): Promise<ClustersResponse> {
  const params = new URLSearchParams({ date, lang, limit: String(limit) });
  const response = await fetch(`/api/v1/clusters?${params}`);
  if (!response.ok) throw await parseFailure(response);
  return (await response.json()) as ClustersResponse;
}

export async function submitVote(
  clusterId: string,
  voterId: string,
  verdict: Verdict,
): Promise<VoteResponse> {
  const response = await fetch(`/api/v1/clusters/${encodeURIComponent(clusterId)}/votes`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify({ voter_id: voterId, verdict }),
  });
  if (!response.ok) throw await parseFailure(response);
  return (await response.json()) as VoteResponse;
}
