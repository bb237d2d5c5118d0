export type UiLang = 'en' | 'ja';

const STRINGS = {
  en: {
    title: 'Suspicious events under debunking',
    headlineMissing: '(no extracted headline)',
    debunkingTweet: 'Debunking tweet',
    partsPointedOut: 'Part pointed out',
    voteFake: 'Fake',
    voteNotFake: 'Not fake',
    emptyDay: 'No clusters for this day.',
    loadFailed: 'Could not load clusters.',
    voteFailed: 'Vote was not accepted.',
    retry: 'Retry',
    likes: 'likes',
    shares: 'retweets',
    members: 'tweets in cluster',
    reply: 'reply to',
    quote: 'quote of',
  },
  ja: {
    title: '打ち消し投稿で検出された疑わしい出来事',
    headlineMissing: '（見出しを抽出できませんでした）',
    debunkingTweet: '打ち消しツイート',
    partsPointedOut: '指摘対象',
    voteFake: 'フェイク',
    voteNotFake: 'フェイクではない',
    emptyDay: 'この日のクラスタはありません。',
    loadFailed: '読み込みに失敗しました。',
    voteFailed: '投票は受け付けられませんでした。',
    retry: '再試行',
    likes: 'いいね',
    shares: 'リツイート',
    members: '件のツイート',
    reply: '返信先',
    quote: '引用元',
  },
} as const;

export type StringKey = keyof (typeof STRINGS)['en'];

export function t(lang: UiLang, key: StringKey): string {
  return STRINGS[lang][key];
}
