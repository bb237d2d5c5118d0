import { t, type UiLang } from './i18n';
import type { ClusterView, Tally, Verdict } from './types';

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderTally(tally: Tally): string {
  return `${tally.fake} / ${tally.not_fake}`;
}

export function updateCardTally(card: HTMLElement, tally: Tally, own: Verdict | null): void {
  const counter = card.querySelector<HTMLElement>('[data-role=tally]');
  if (counter) counter.textContent = renderTally(tally);
  for (const button of card.querySelectorAll<HTMLButtonElement>('button[data-verdict]')) {
    button.classList.toggle('chosen', button.dataset.verdict === own);
  }
}

/** One event-cluster card: headline, debunking tweet, parts pointed out, voting. */
export function renderCard(
  view: ClusterView,
  lang: UiLang,
  own: Verdict | null,
  onVote: (clusterId: string, verdict: Verdict, card: HTMLElement) => void,
): HTMLElement {
  const card = el('article', 'cluster-card');
  card.dataset.clusterId = view.cluster_id;
  card.dataset.position = String(view.position);

  const rank = el('span', 'rank', `#${view.position}`);
  const headline = el(
    'h2',
    'headline',
    view.headline ?? t(lang, 'headlineMissing'),
  );
  headline.dataset.role = 'headline';
  const header = el('header');
  header.append(rank, headline);
  card.append(header);

  const tweetBlock = el('section', 'debunking-tweet');
  tweetBlock.dataset.role = 'debunking-tweet';
  tweetBlock.append(el('h3', 'block-label', t(lang, 'debunkingTweet')));
  tweetBlock.append(el('blockquote', 'tweet-text', view.debunking_tweet.text));
  tweetBlock.append(
    el(
      'p',
      'metrics',
      `${view.debunking_tweet.like_count} ${t(lang, 'likes')} · ` +
        `${view.debunking_tweet.share_count} ${t(lang, 'shares')} · ` +
        `${view.tweet_count} ${t(lang, 'members')}`,
    ),
  );
  card.append(tweetBlock);

  const parts = el('section', 'parts');
  parts.dataset.role = 'parts-pointed-out';
  parts.append(el('h3', 'block-label', t(lang, 'partsPointedOut')));
  const list = el('ul');
  for (const part of view.parts_pointed_out) {
    const item = el('li', `part part-${part.kind}`);
    if (part.kind === 'url') {
      const anchor = el('a', undefined, part.value);
      anchor.setAttribute('href', part.value);
      anchor.setAttribute('rel', 'noopener noreferrer');
      anchor.setAttribute('target', '_blank');
      item.append(anchor);
    } else {
      item.textContent = `${t(lang, part.kind)} ${part.value}`;
    }
    list.append(item);
  }
  parts.append(list);
  card.append(parts);

  const voting = el('section', 'voting');
  const tallyLine = el('span', 'tally', renderTally(view.tally));
  tallyLine.dataset.role = 'tally';
  for (const verdict of ['fake', 'not_fake'] as Verdict[]) {
    const button = el(
      'button',
      'vote',
      verdict === 'fake' ? t(lang, 'voteFake') : t(lang, 'voteNotFake'),
    );
    button.dataset.verdict = verdict;
    if (own === verdict) button.classList.add('chosen');
    button.addEventListener('click', () => onVote(view.cluster_id, verdict, card));
    voting.append(button);
  }
  voting.append(tallyLine);
  const message = el('span', 'vote-message');
  message.dataset.role = 'vote-message';
  voting.append(message);
  card.append(voting);

  return card;
}

export function renderEmpty(lang: UiLang): HTMLElement {
  const box = el('div', 'empty-state', t(lang, 'emptyDay'));
  box.dataset.role = 'empty-state';
  return box;
}

export function renderErrorBanner(lang: UiLang, onRetry: () => void): HTMLElement {
  const banner = el('div', 'error-banner');
  banner.dataset.role = 'error-banner';
  banner.append(el('span', undefined, t(lang, 'loadFailed')));
  const retry = el('button', 'retry', t(lang, 'retry'));
  retry.addEventListener('click', onRetry);
  banner.append(retry);
  return banner;
}
