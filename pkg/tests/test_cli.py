from __future__ import annotations

import json

import pytest

from fakefeed.cli import main
from fakefeed.storage import ClusterStore

DAY = "2019-12-08"


def _record(tweet_id, text, shares, urls=(), reply_to=None):
    return {
        "id": tweet_id,
        "lang": "en",
        "text": text,
        "created_at": f"{DAY}T10:00:00Z",
        "share_count": shares,
        "like_count": shares * 2,
        "urls": list(urls),
        "reply_to_id": reply_to,
        "quote_of_id": None,
        "retweeter_count": 10,
        "follower_retweeter_count": 5,
        "author_verified": False,
    }


PARSES = """# tweet_id = a1
1\tmoonbase\t_\tNOUN\t_\t_\t2\tcompound\t_\t_
2\tphoto\t_\tNOUN\t_\t_\t5\tnsubj\t_\t_
3\tis\t_\tAUX\t_\t_\t5\tcop\t_\t_
4\tcompletely\t_\tADV\t_\t_\t5\tadvmod\t_\t_
5\tfake\t_\tADJ\t_\t_\t0\troot\t_\t_
6\t!\t_\tPUNCT\t_\t_\t5\tpunct\t_\t_

# tweet_id = a2
1\tmoonbase\t_\tNOUN\t_\t_\t4\tnsubj\t_\t_
2\tpic\t_\tNOUN\t_\t_\t1\tflat\t_\t_
3\tis\t_\tAUX\t_\t_\t4\tcop\t_\t_
4\tfake\t_\tADJ\t_\t_\t0\troot\t_\t_
5\t!\t_\tPUNCT\t_\t_\t4\tpunct\t_\t_
"""


@pytest.fixture
def workspace(tmp_path):
    source = tmp_path / "source.jsonl"
    records = [
        _record("a1", "moonbase photo is completely fake!", 9, urls=["http://ex.com/moon"]),
        _record("a2", "moonbase pic is fake!", 7),
        _record("b1", "boring day", 8, urls=["http://ex.com/other"]),
        _record("c1", "below threshold is fake!", 2),
    ]
    source.write_text("\n".join(json.dumps(r) for r in records) + "\n", "utf-8")

    parses = tmp_path / "parses.conllu"
    parses.write_text(PARSES, "utf-8")

    embeddings = tmp_path / "embeddings.txt"
    embeddings.write_text("2 1\nmoonbase 1.0\nphoto 1.1\n", "utf-8")

    return tmp_path


def test_crawl_archive_export_flow(workspace, capsys):
    data_dir = workspace / "data"
    assert main(["crawl", "--source", str(workspace / "source.jsonl"), "--data-dir", str(data_dir)]) == 0
    day_file = data_dir / "tweets" / "en" / f"{DAY}.jsonl"
    assert day_file.is_file()
    assert len(day_file.read_text("utf-8").splitlines()) == 4

    assert (
        main(
            [
                "archive",
                "--date", DAY,
                "--lang", "en",
                "--embeddings", str(workspace / "embeddings.txt"),
                "--parses", str(workspace / "parses.conllu"),
                "--data-dir", str(data_dir),
            ]
        )
        == 0
    )

    store = ClusterStore(data_dir)
    clusters = store.get_top_clusters(DAY, "en")
    # a1+a2 merge on phrase distance (|1.0-1.05| … < 0.25); c1 is filtered out.
    assert [c.tweet_ids for c in clusters] == [("a1", "a2"), ("b1",)]
    assert clusters[0].headline == "moonbase photo"

    out_file = workspace / "dataset.ndjson"
    assert (
        main(
            [
                "export",
                "--from", DAY,
                "--to", DAY,
                "--lang", "en",
                "--data-dir", str(data_dir),
                "--output", str(out_file),
            ]
        )
        == 0
    )
    lines = out_file.read_text("utf-8").splitlines()
    assert len(lines) == 2
    record = json.loads(lines[0])
    assert record["cluster_id"] == "a1"
    assert record["recrawl_queries"] == ["url:http://ex.com/moon", '"moonbase photo"', '"moonbase pic"']


def test_archive_without_stored_day_fails(workspace, capsys):
    data_dir = workspace / "data"
    code = main(["archive", "--date", "2030-01-01", "--lang", "en", "--data-dir", str(data_dir)])
    assert code == 1


JA_PARSES = """# tweet_id = j1
1\tその\t_\tDET\t_\t_\t2\tdet\t_\t_
2\t動画\t_\tNOUN\t_\t_\t4\tnsubj\t_\t_
3\tは\t_\tADP\t_\t_\t2\tcase\t_\t_
4\tデマ\t_\tNOUN\t_\t_\t0\troot\t_\t_
5\tです\t_\tAUX\t_\t_\t4\tcop\t_\t_
6\t。\t_\tPUNCT\t_\t_\t4\tpunct\t_\t_

# tweet_id = j2
1\tあの\t_\tDET\t_\t_\t2\tdet\t_\t_
2\t動画\t_\tNOUN\t_\t_\t4\tnsubj\t_\t_
3\tは\t_\tADP\t_\t_\t2\tcase\t_\t_
4\tデマ\t_\tNOUN\t_\t_\t0\troot\t_\t_
5\tです\t_\tAUX\t_\t_\t4\tcop\t_\t_
6\t。\t_\tPUNCT\t_\t_\t4\tpunct\t_\t_

# tweet_id = j3
1\t月面\t_\tNOUN\t_\t_\t2\tcompound\t_\t_
2\t基地\t_\tNOUN\t_\t_\t4\tnmod\t_\t_
3\tの\t_\tADP\t_\t_\t2\tcase\t_\t_
4\t写真\t_\tNOUN\t_\t_\t6\tnsubj\t_\t_
5\tは\t_\tADP\t_\t_\t4\tcase\t_\t_
6\tフェイク\t_\tNOUN\t_\t_\t0\troot\t_\t_
7\t。\t_\tPUNCT\t_\t_\t6\tpunct\t_\t_
"""

JA_VECTORS = """7 1
その 0.0
あの 0.05
動画 1.0
は 0.5
月面 5.2
基地 5.4
写真 5.6
"""


def test_japanese_day_flow(tmp_path):
    def ja_record(tweet_id, text, shares, likes=10, reply_to=None):
        record = _record(tweet_id, text, shares, reply_to=reply_to)
        record["lang"] = "ja"
        record["like_count"] = likes
        return record

    records = [
        ja_record("j1", "その動画はデマです。", 20, likes=300),
        ja_record("j2", "あの動画はデマです。", 9),
        ja_record("j3", "月面基地の写真はフェイク。", 8, reply_to="orig9"),
        ja_record("j4", "これも怪しい。", 7, reply_to="orig9"),
        ja_record("j5", "拡散しないでください。", 2),  # under the share filter
    ]
    source = tmp_path / "ja.jsonl"
    source.write_text("\n".join(json.dumps(r, ensure_ascii=False) for r in records) + "\n", "utf-8")
    (tmp_path / "parses.conllu").write_text(JA_PARSES, "utf-8")
    (tmp_path / "vectors.ja.txt").write_text(JA_VECTORS, "utf-8")
    data_dir = tmp_path / "data"

    assert main(["crawl", "--source", str(source), "--data-dir", str(data_dir)]) == 0
    assert (
        main(
            [
                "archive",
                "--date", DAY,
                "--lang", "ja",
                "--embeddings", str(tmp_path / "vectors.ja.txt"),
                "--parses", str(tmp_path / "parses.conllu"),
                "--data-dir", str(data_dir),
            ]
        )
        == 0
    )

    clusters = ClusterStore(data_dir).get_top_clusters(DAY, "ja")
    assert [c.tweet_ids for c in clusters] == [("j1", "j2"), ("j3", "j4")]
    # Paraphrases merged on phrase distance; the reply pair on its target.
    assert clusters[0].headline == "その動画は"
    assert clusters[1].headline == "月面基地の写真は"
    reasons = {ev.reason for c in clusters for ev in c.link_evidence}
    assert reasons == {"wmd", "reply"}


def test_eval_kappa_command(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("fake\nfake\nfake\nnot_fake\n", "utf-8")
    b.write_text("fake\nfake\nnot_fake\nnot_fake\n", "utf-8")
    assert main([str(x) for x in ("eval-kappa", a, b)]) == 0
    assert capsys.readouterr().out.strip() == "0.5000"


def test_config_file_supplies_defaults(workspace, capsys):
    data_dir = workspace / "data"
    config = workspace / "config.json"
    config.write_text(
        json.dumps(
            {
                "data_dir": str(data_dir),
                "embeddings": {"en": str(workspace / "embeddings.txt")},
                "tau": 0.25,
            }
        ),
        "utf-8",
    )
    assert main(["--config", str(config), "crawl", "--source", str(workspace / "source.jsonl")]) == 0
    assert (
        main(
            [
                "--config", str(config),
                "archive",
                "--date", DAY,
                "--lang", "en",
                "--parses", str(workspace / "parses.conllu"),
            ]
        )
        == 0
    )
    assert len(ClusterStore(data_dir).get_top_clusters(DAY, "en")) == 2
