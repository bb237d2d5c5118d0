from __future__ import annotations

import sys
from datetime import datetime, timezone
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fakefeed.ingest import Tweet


@pytest.fixture
def make_tweet():
    def factory(
        tweet_id: str,
        lang: str = "en",
        text: str = "placeholder",
        created_at: datetime | None = None,
        share_count: int = 10,
        like_count: int = 0,
        urls: tuple[str, ...] = (),
        reply_to_id: str | None = None,
        quote_of_id: str | None = None,
        retweeter_count: int = 0,
        follower_retweeter_count: int = 0,
        author_verified: bool = False,
    ) -> Tweet:
        return Tweet(
            id=tweet_id,
            lang=lang,
            text=text,
            created_at=created_at or datetime(2019, 12, 8, 12, 0, tzinfo=timezone.utc),
            share_count=share_count,
            like_count=like_count,
            urls=urls,
            reply_to_id=reply_to_id,
            quote_of_id=quote_of_id,
            retweeter_count=retweeter_count,
            follower_retweeter_count=follower_retweeter_count,
            author_verified=author_verified,
        )

    return factory
