use std::collections::BTreeSet;

use proptest::prelude::*;
use sindhi_spell_core::boundary::repair_runon;
use sindhi_spell_core::classify::Multiplicity;
use sindhi_spell_core::edit::{damerau_distance_within, single_edits};
use sindhi_spell_core::trends::{analyze, CorpusPair};
use sindhi_spell_core::{
    apply, apply_script, classify_pair, damerau_distance, diagnose, normalize, suggest, Alphabet,
    ConfusionTable, EditOp, GraphemeSeq, KeyboardLayout, Lexicon, RankingConfig, SpellContext,
};

/// Letters used for random words: a few phonetic/visual partners plus a
/// repeated-letter-prone small set.
const LETTERS: [char; 10] = ['ا', 'ب', 'پ', 'ت', 'ط', 'س', 'ص', 'ه', 'ح', 'ڪ'];

fn word_strategy(max: usize) -> impl Strategy<Value = Vec<char>> {
    prop::collection::vec(prop::sample::select(LETTERS.to_vec()), 0..=max)
}

fn seq(chars: &[char]) -> GraphemeSeq {
    normalize(&chars.iter().collect::<String>()).unwrap()
}

/// Reference optimal string alignment distance.
fn osa(a: &[char], b: &[char]) -> usize {
    let (n, m) = (a.len(), b.len());
    let mut d = vec![vec![0usize; m + 1]; n + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in d[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=n {
        for j in 1..=m {
            let cost = usize::from(a[i - 1] != b[j - 1]);
            let mut v = (d[i - 1][j] + 1).min(d[i][j - 1] + 1).min(d[i - 1][j - 1] + cost);
            if i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] {
                v = v.min(d[i - 2][j - 2] + 1);
            }
            d[i][j] = v;
        }
    }
    d[n][m]
}

/// Every distinct string one raw edit away from `w` over `letters`.
fn brute_neighbours(w: &[char], letters: &[char]) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let s = |v: Vec<char>| v.into_iter().collect::<String>();
    for p in 0..=w.len() {
        for &c in letters {
            let mut v = w.to_vec();
            v.insert(p, c);
            out.insert(s(v));
        }
    }
    for p in 0..w.len() {
        let mut v = w.to_vec();
        v.remove(p);
        out.insert(s(v));
        for &c in letters {
            let mut v = w.to_vec();
            v[p] = c;
            out.insert(s(v));
        }
        if p + 1 < w.len() {
            let mut v = w.to_vec();
            v.swap(p, p + 1);
            out.insert(s(v));
        }
    }
    out.remove(&s(w.to_vec()));
    out
}

fn fixture() -> (Alphabet, ConfusionTable, KeyboardLayout) {
    (Alphabet::sindhi(), ConfusionTable::sindhi(), KeyboardLayout::sindhi())
}

fn text_strategy() -> impl Strategy<Value = String> {
    let pieces = prop_oneof![
        prop::sample::select(vec!['ا', 'ب', 'ي', 'ه', 'ھ', 'ی', 'ڪ', 'ک', 'a']),
        // harakat, madda, hamza above/below, superscript alef
        (0x064Bu32..=0x0655).prop_map(|c| char::from_u32(c).unwrap()),
        Just('\u{0670}'),
        // presentation forms A and B (assigned subset)
        (0xFE80u32..=0xFEFC).prop_map(|c| char::from_u32(c).unwrap()),
        (0xFB50u32..=0xFBB1).prop_map(|c| char::from_u32(c).unwrap()),
        prop::sample::select(vec!['\u{200C}', '\u{200D}', '\u{FEFF}']),
    ];
    prop::collection::vec(pieces, 0..12).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn normalize_is_idempotent(t in text_strategy()) {
        if let Ok(once) = normalize(&t) {
            let twice = normalize(once.as_str()).unwrap();
            prop_assert_eq!(twice.clone(), once.clone());
            prop_assert_eq!(twice.len(), once.len());
        }
    }

    #[test]
    fn distance_matches_reference(a in word_strategy(8), b in word_strategy(8)) {
        let (x, y) = (seq(&a), seq(&b));
        let d = damerau_distance(&x, &y);
        prop_assert_eq!(d, osa(&a, &b));
        prop_assert_eq!(d, damerau_distance(&y, &x));
        prop_assert_eq!(d == 0, a == b);
        for max in 0..4 {
            prop_assert_eq!(damerau_distance_within(&x, &y, max), (d <= max).then_some(d));
        }
    }

    #[test]
    fn diagnosis_is_minimal_and_replays(a in word_strategy(7), b in word_strategy(7)) {
        let (wrong, intended) = (seq(&a), seq(&b));
        let script = diagnose(&wrong, &intended);
        prop_assert_eq!(script.len(), osa(&a, &b));
        prop_assert_eq!(apply_script(&intended, &script).unwrap(), wrong);
        let positions: Vec<usize> = script.iter().map(EditOp::position).collect();
        prop_assert!(positions.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn single_edits_match_brute_force(a in word_strategy(5)) {
        let (alphabet, _, _) = fixture();
        let w = seq(&a);
        let got: BTreeSet<String> =
            single_edits(&w, &alphabet).into_iter().map(|(v, _)| v.into_string()).collect();
        prop_assert_eq!(got, brute_neighbours(&a, alphabet.letters()));
        for (v, op) in single_edits(&w, &alphabet) {
            prop_assert_eq!(apply(&w, &op).unwrap(), v.clone());
            prop_assert_eq!(damerau_distance(&v, &w), 1);
        }
    }

    #[test]
    fn lexicon_agrees_with_linear_scan(
        words in prop::collection::vec(word_strategy(4), 0..20),
        probe in word_strategy(4),
    ) {
        let lex = Lexicon::from_words(words.iter().map(|w| seq(w)));
        let expected = !probe.is_empty() && words.contains(&probe);
        prop_assert_eq!(lex.contains(&seq(&probe)), expected);
        let distinct: BTreeSet<&Vec<char>> = words.iter().filter(|w| !w.is_empty()).collect();
        prop_assert_eq!(lex.len(), distinct.len());
    }

    #[test]
    fn runon_finds_every_split(a in word_strategy(4), b in word_strategy(4)) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        let lex = Lexicon::from_words([seq(&a), seq(&b)]);
        let joined: Vec<char> = a.iter().chain(&b).copied().collect();
        let splits = repair_runon(&seq(&joined), &lex);
        prop_assert!(splits.contains(&(seq(&a), seq(&b))));
    }

    #[test]
    fn suggestions_are_words_that_replay(
        words in prop::collection::vec((word_strategy(5), 0u64..50), 1..25),
        token in word_strategy(5),
    ) {
        let (alphabet, tables, layout) = fixture();
        let mut b = Lexicon::builder();
        for (w, f) in &words {
            b.insert(seq(w), *f);
        }
        let lexicon = b.build();
        let ctx = SpellContext { lexicon: &lexicon, alphabet: &alphabet, tables: &tables, layout: &layout };
        let config = RankingConfig { max_suggestions: 1000, ..RankingConfig::default() };
        let t = seq(&token);
        let out = suggest(&t, &ctx, &config);
        if lexicon.contains(&t) || t.is_empty() {
            prop_assert!(out.is_empty());
        }
        for s in &out {
            prop_assert!(s.score > 0.0);
            for w in &s.words {
                prop_assert!(lexicon.contains(w));
            }
            let span = GraphemeSeq::join_words(&s.words);
            prop_assert_eq!(apply_script(&span, &s.script).unwrap(), t.clone());
        }
        prop_assert!(out.windows(2).all(|w| w[0].score > w[1].score
            || (w[0].score == w[1].score && w[0].text() < w[1].text())));

        // set = brute-force distance <= 1 scan plus run-on splits
        if !lexicon.contains(&t) && !t.is_empty() {
            let mut expected: BTreeSet<String> = lexicon
                .words()
                .filter(|w| osa(&w.as_str().chars().collect::<Vec<_>>(), &token) <= 1)
                .map(|w| w.to_string())
                .collect();
            for i in 1..token.len() {
                let (l, r) = (seq(&token[..i]), seq(&token[i..]));
                if lexicon.contains(&l) && lexicon.contains(&r) {
                    expected.insert(format!("{l} {r}"));
                }
            }
            let got: BTreeSet<String> = out.iter().map(|s| s.text()).collect();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn raising_frequency_never_lowers_rank(
        words in prop::collection::vec(word_strategy(4), 2..15),
        edit in any::<prop::sample::Index>(),
        pick in any::<prop::sample::Index>(),
        boost in 1u64..1000,
    ) {
        let (alphabet, tables, layout) = fixture();
        let base = Lexicon::from_words(words.iter().map(|w| seq(w)));
        prop_assume!(!base.is_empty());
        let ctx = SpellContext { lexicon: &base, alphabet: &alphabet, tables: &tables, layout: &layout };
        let config = RankingConfig { max_suggestions: 1000, ..RankingConfig::default() };
        // corrupt a lexicon word so that at least that word is suggested
        let source = base.words().next().unwrap().clone();
        let variants = single_edits(&source, &alphabet);
        let t = variants[edit.index(variants.len())].0.clone();
        prop_assume!(!base.contains(&t));
        let before = suggest(&t, &ctx, &config);
        prop_assume!(!before.is_empty());
        let target = before[pick.index(before.len())].words.clone();
        prop_assume!(target.len() == 1);
        let mut b = Lexicon::builder();
        for w in base.words() {
            b.insert(w.clone(), if *w == target[0] { boost } else { 0 });
        }
        let boosted = b.build();
        let ctx = SpellContext { lexicon: &boosted, ..ctx };
        let after = suggest(&t, &ctx, &config);
        let rank = |list: &[sindhi_spell_core::Suggestion]| list.iter().position(|s| s.words == target).unwrap();
        prop_assert!(rank(&after) <= rank(&before));
    }

    #[test]
    fn classification_ignores_frequencies(
        intended in word_strategy(6),
        wrong in word_strategy(6),
        freq in 0u64..1000,
    ) {
        prop_assume!(!intended.is_empty() && intended != wrong);
        let (_, tables, layout) = fixture();
        let (w, i) = (seq(&wrong), seq(&intended));
        let plain = Lexicon::from_words([i.clone()]);
        let mut b = Lexicon::builder();
        b.insert(i.clone(), freq);
        let weighted = b.build();
        let c1 = classify_pair(&w, &i, &plain, &tables, &layout).unwrap();
        let c2 = classify_pair(&w, &i, &weighted, &tables, &layout).unwrap();
        prop_assert_eq!(&c1, &c2);
        prop_assert_eq!(&c1.edit_script, &diagnose(&w, &i));
        prop_assert_eq!(c1.multiplicity == Multiplicity::Single, c1.edit_script.len() == 1);
    }

    #[test]
    fn analyze_is_order_free_and_additive(
        pairs in prop::collection::vec((word_strategy(5), word_strategy(5)), 1..20),
        split in any::<prop::sample::Index>(),
        shuffle_seed in any::<u64>(),
    ) {
        let (_, tables, layout) = fixture();
        let pairs: Vec<CorpusPair> = pairs
            .into_iter()
            .filter(|(w, i)| !i.is_empty() && w != i)
            .map(|(w, i)| CorpusPair::word(seq(&w), seq(&i)))
            .collect();
        prop_assume!(pairs.len() >= 2);
        let lexicon = Lexicon::from_words(pairs.iter().map(|p| p.intended[0].clone()));
        let whole = analyze(&pairs, &lexicon, &tables, &layout).unwrap();

        let mut shuffled = pairs.clone();
        let mut state = shuffle_seed;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(analyze(&shuffled, &lexicon, &tables, &layout).unwrap(), whole);

        let k = 1 + split.index(pairs.len() - 1);
        let mut parts = analyze(&pairs[..k], &lexicon, &tables, &layout).unwrap();
        parts.merge(&analyze(&pairs[k..], &lexicon, &tables, &layout).unwrap());
        prop_assert_eq!(parts, whole);
        prop_assert_eq!(whole.single_error_total + whole.multiple_error, whole.total_errors);
        prop_assert_eq!(
            whole.transposition + whole.insertion + whole.deletion + whole.substitution,
            whole.single_error_total
        );
    }
}

#[test]
fn similarity_relations_are_symmetric() {
    let (alphabet, tables, layout) = fixture();
    for &a in alphabet.letters() {
        assert!(tables.visually_similar(a, a));
        assert!(!layout.keyboard_adjacent(a, a));
        for &b in alphabet.letters() {
            assert_eq!(tables.visually_similar(a, b), tables.visually_similar(b, a), "{a} {b}");
            assert_eq!(layout.keyboard_adjacent(a, b), layout.keyboard_adjacent(b, a), "{a} {b}");
        }
    }
}

#[test]
fn confusion_letters_are_in_the_alphabet() {
    let (alphabet, tables, _) = fixture();
    let mut covered = BTreeSet::new();
    for g in tables.phonetic_groups() {
        for &c in &g.members {
            assert!(alphabet.contains(c), "{c}");
            assert!(covered.insert(sindhi_spell_core::alphabet::base_letter(c)) || c == 'آ' || c == 'ئ');
        }
    }
    assert_eq!(tables.phonetic_groups().len(), 22);
    for &c in alphabet.letters() {
        assert!(tables.phonetic_group(c).is_some(), "{c} has no group");
    }
}
