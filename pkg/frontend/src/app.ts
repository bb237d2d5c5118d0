import { ApiError, fetchClusters, submitVote } from './api';
import { ownVerdict, rememberVerdict, voterId } from './identity';
import { t, type UiLang } from './i18n';
import { renderCard, renderEmpty, renderErrorBanner, updateCardTally } from './render';
import type { Tally, Verdict } from './types';

export interface AppElements {
  list: HTMLElement;
  status: HTMLElement;
  dateInput: HTMLInputElement;
  langSelect: HTMLSelectElement;
}

function today(): string {
  return new Date().toISOString().slice(0, 10);
}

export class ReviewApp {
  private readonly elements: AppElements;

  constructor(elements: AppElements) {
    this.elements = elements;
    elements.dateInput.addEventListener('change', () => void this.load());
    elements.langSelect.addEventListener('change', () => void this.load());
    if (!elements.dateInput.value) elements.dateInput.value = today();
  }

  get lang(): UiLang {
    return this.elements.langSelect.value === 'ja' ? 'ja' : 'en';
  }

  /** Fetch and render; on failure keep previous content and show the banner. */
  async load(): Promise<void> {
    const { list, status, dateInput } = this.elements;
    status.replaceChildren();
    try {
      const response = await fetchClusters(dateInput.value, this.lang, 10);
      list.replaceChildren();
      if (response.clusters.length === 0) {
        list.append(renderEmpty(this.lang));
        return;
      }
      for (const view of response.clusters) {
        // Server order is authoritative; cards are appended as received.
        list.append(
          renderCard(view, this.lang, ownVerdict(view.cluster_id) as Verdict | null, (id, verdict, card) =>
            void this.vote(id, verdict, card),
          ),
        );
      }
    } catch {
      status.append(renderErrorBanner(this.lang, () => void this.load()));
    }
  }

  private readTally(card: HTMLElement): Tally {
    const text = card.querySelector('[data-role=tally]')?.textContent ?? '0 / 0';
    const [fake = '0', notFake = '0'] = text.split('/').map((s) => s.trim());
    return { fake: Number(fake), not_fake: Number(notFake) };
  }

  async vote(clusterId: string, verdict: Verdict, card: HTMLElement): Promise<void> {
    const message = card.querySelector<HTMLElement>('[data-role=vote-message]');
    if (message) message.textContent = '';
    const before = this.readTally(card);
    const previous = ownVerdict(clusterId) as Verdict | null;

    // Optimistic bump: move this voter's count immediately.
    const optimistic: Tally = { ...before };
    if (previous !== verdict) {
      if (previous) optimistic[previous] -= 1;
      optimistic[verdict] += 1;
    }
    updateCardTally(card, optimistic, verdict);

    try {
      const response = await submitVote(clusterId, voterId(), verdict);
      rememberVerdict(clusterId, verdict);
      updateCardTally(card, response.tally, response.voter_verdict);
    } catch (error) {
      updateCardTally(card, before, previous);
      if (message) {
        message.textContent =
          error instanceof ApiError && error.status === 404
            ? error.message
            : t(this.lang, 'voteFailed');
      }
    }
  }
}

export function bootstrap(document: Document): ReviewApp {
  const elements: AppElements = {
    list: document.querySelector('#cluster-list') as HTMLElement,
    status: document.querySelector('#status') as HTMLElement,
    dateInput: document.querySelector('#date') as HTMLInputElement,
    langSelect: document.querySelector('#lang') as HTMLSelectElement,
  };
  const app = new ReviewApp(elements);
  void app.load();
  return app;
}
