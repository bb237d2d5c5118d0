export type Verdict = 'fake' | 'not_fake';

export interface Tally {
  fake: number;
  not_fake: number;
}

export interface PartPointedOut {
  kind: 'url' | 'quote' | 'reply';
  value: string;
}

export interface DebunkingTweet {
  id: string;
  text: string;
  created_at: string;
  like_count: number;
  share_count: number;
  author_verified: boolean;
}

/** Mirrors one element of GET /api/v1/clusters; nothing is recomputed here. */
export interface ClusterView {
  cluster_id: string;
  date: string;
  lang: string;
  position: number;
  headline: string | null;
  debunking_tweet: DebunkingTweet;
  parts_pointed_out: PartPointedOut[];
  tweet_count: number;
  tally: Tally;
  label: string;
}

export interface ClustersResponse {
  date: string;
  lang: string;
  clusters: ClusterView[];
}

export interface VoteResponse {
  cluster_id: string;
  tally: Tally;
  label: string;
  voter_verdict: Verdict;
}
