import type { ClustersResponse, ClusterView, Tally } from '../src/types';

export function makeCluster(position: number, overrides: Partial<ClusterView> = {}): ClusterView {
  const id = `c${String(position).padStart(2, '0')}`;
  return {
    cluster_id: id,
    date: '2019-12-08',
    lang: 'en',
    position,
    headline: `suspicious event ${position}`,
    debunking_tweet: {
      id: `${id}-rep`,
      text: `story ${position} is fake!`,
      created_at: '2019-12-08T10:00:00Z',
      like_count: 100 - position,
      share_count: 50 - position,
      author_verified: false,
    },
    parts_pointed_out: [
      { kind: 'url', value: `http://news.example/${position}` },
      { kind: 'reply', value: `orig${position}` },
    ],
    tweet_count: 3,
    tally: { fake: 0, not_fake: 0 },
    label: 'unverified',
    ...overrides,
  };
}

export function clustersResponse(count: number): ClustersResponse {
  return {
    date: '2019-12-08',
    lang: 'en',
    clusters: Array.from({ length: count }, (_, i) => makeCluster(i + 1)),
  };
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

export function voteResponse(clusterId: string, tally: Tally, verdict: string): Response {
  return jsonResponse({
    cluster_id: clusterId,
    tally,
    label: 'unverified',
    voter_verdict: verdict,
  });
}
