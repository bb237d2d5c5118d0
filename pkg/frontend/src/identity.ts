const VOTER_KEY = 'fakefeed.voter_id';
const VERDICT_KEY = 'fakefeed.verdicts';

/** Opaque voter id, stable across sessions on this browser. */
export function voterId(): string {
  let id = localStorage.getItem(VOTER_KEY);
  if (!id) {
    id =
      typeof crypto.randomUUID === 'function'
        ? crypto.randomUUID()
        : `v-${Date.now()}-${Math.random().toString(36).slice(2)}`;
    localStorage.setItem(VOTER_KEY, id);
  }
  return id;
}

function readVerdicts(): Record<string, string> {
  try {
    return JSON.parse(localStorage.getItem(VERDICT_KEY) ?? '{}');
  } catch {
    return {};
  }
}

export function ownVerdict(clusterId: string): string | null {
  return readVerdicts()[clusterId] ?? null;
}

export function rememberVerdict(clusterId: string, verdict: string): void {
  const verdicts = readVerdicts();
  verdicts[clusterId] = verdict;
  localStorage.setItem(VERDICT_KEY, JSON.stringify(verdicts));
}
