from __future__ import annotations

from datetime import date

from fakefeed.conllu import parse_conllu
from fakefeed.embeddings import EmbeddingTable
from fakefeed.ingest import DailyBatch
from fakefeed.patterns import PatternSpec, compile_pattern
from fakefeed.pipeline import archive_day, extract_phrases, first_match
from fakefeed.rules import load_rules_config

import numpy as np


def test_first_match_is_leftmost_across_patterns():
    late = compile_pattern(PatternSpec("en", "is fake"))
    early = compile_pattern(PatternSpec("en", "#fakenews"))
    text = "#fakenews and yes it is fake"
    # Registration order must not matter: the earlier span wins either way.
    assert first_match([late, early], text).matched_text == "#fakenews"
    assert first_match([early, late], text).matched_text == "#fakenews"
    assert first_match([late], "nothing here") is None


def test_first_match_prefers_longer_span_on_same_start():
    shorter = compile_pattern(PatternSpec("en", "is fake"))
    longer = compile_pattern(PatternSpec("en", "is fake news"))
    text = "that is fake news"
    assert first_match([shorter, longer], text).matched_text == "is fake news"


def test_extract_phrases_skips_missing_or_misaligned_parses(make_tweet):
    rules = load_rules_config()
    compiled = rules.compiled("en")
    with_parse = make_tweet("a", text="Michael talking is fake!")
    without_parse = make_tweet("b", text="something else is fake!")
    conllu = """1\tMichael\t_\tPROPN\t_\t_\t2\tnsubj\t_\t_
2\ttalking\t_\tVERB\t_\t_\t4\tcsubj\t_\t_
3\tis\t_\tAUX\t_\t_\t4\tcop\t_\t_
4\tfake\t_\tADJ\t_\t_\t0\troot\t_\t_
5\t!\t_\tPUNCT\t_\t_\t4\tpunct\t_\t_
"""
    parses = {"a": parse_conllu(conllu, "a", raw_text=with_parse.text)}
    phrases = extract_phrases([with_parse, without_parse], parses, compiled, rules)
    assert set(phrases) == {"a"}
    assert phrases["a"].text == "Michael talking"


def test_archive_day_runs_the_whole_sequence(make_tweet):
    rules = load_rules_config()
    table = EmbeddingTable(dim=1, vectors={"Michael": np.array([1.0]), "talking": np.array([1.1])})
    tweets = (
        make_tweet("a", text="Michael talking is fake!", share_count=9),
        make_tweet("b", text="Michael talking is fake!", share_count=8),
        make_tweet("c", text="filtered out", share_count=1),
    )
    batch = DailyBatch(date=date(2019, 12, 8), lang="en", tweets=tweets)
    conllu = """1\tMichael\t_\tPROPN\t_\t_\t2\tnsubj\t_\t_
2\ttalking\t_\tVERB\t_\t_\t4\tcsubj\t_\t_
3\tis\t_\tAUX\t_\t_\t4\tcop\t_\t_
4\tfake\t_\tADJ\t_\t_\t0\troot\t_\t_
5\t!\t_\tPUNCT\t_\t_\t4\tpunct\t_\t_
"""
    parses = {
        "a": parse_conllu(conllu, "a", raw_text=tweets[0].text),
        "b": parse_conllu(conllu, "b", raw_text=tweets[1].text),
    }
    result = archive_day(batch, parses, rules, table)
    assert [t.id for t in result.batch.tweets] == ["a", "b"]
    assert len(result.ranked) == 1
    assert result.ranked[0].cluster.tweet_ids == ("a", "b")
    assert result.phrases["a"].text == "Michael talking"
