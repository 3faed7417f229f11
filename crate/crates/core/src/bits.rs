//! Vertex sets as 64-bit masks. Vertex `i` (1-based) is bit `i - 1`.

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

pub type Mask = u64;

#[inline]
pub fn bit(vertex: usize) -> Mask {
    1u64 << (vertex - 1)
}

/// Mask of `{1..n}`.
#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn size(mask: Mask) -> usize {
    mask.count_ones() as usize
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// 1-based vertices of a mask, increasing.
pub fn vertices(mut mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(size(mask));
    while mask != 0 {
        let low = mask.trailing_zeros() as usize;
        out.push(low + 1);
        mask &= mask - 1;
    }
    out
}

pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Mask {
    vs.into_iter().fold(0, |m, v| m | bit(v))
}

/// All submasks of `mask`, including `0` and `mask` itself.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 { None } else { Some((current - 1) & mask) };
        Some(current)
    })
}

/// Compares masks by their increasing vertex lists, lexicographically.
pub fn cmp_vertex_lists(a: Mask, b: Mask) -> std::cmp::Ordering {
    vertices(a).cmp(&vertices(b))
}

pub fn format_set(mask: Mask) -> String {
    let inner: Vec<String> = vertices(mask).iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Keeps only the inclusion-maximal masks, sorted by vertex list.
pub fn maximal(masks: impl IntoIterator<Item = Mask>) -> Vec<Mask> {
    let mut all: Vec<Mask> = masks.into_iter().collect();
    all.sort_unstable_by_key(|m| std::cmp::Reverse(size(*m)));
    all.dedup();
    let mut kept: Vec<Mask> = Vec::new();
    for m in all {
        if !kept.iter().any(|&k| is_subset(m, k)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| cmp_vertex_lists(*a, *b));
    kept.dedup();
    kept
}

/// Keeps only the inclusion-minimal masks, sorted by vertex list.
pub fn minimal(masks: impl IntoIterator<Item = Mask>) -> Vec<Mask> {
    let mut all: Vec<Mask> = masks.into_iter().collect();
    all.sort_unstable_by_key(|m| size(*m));
    all.dedup();
    let mut kept: Vec<Mask> = Vec::new();
    for m in all {
        if !kept.iter().any(|&k| is_subset(k, m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| cmp_vertex_lists(*a, *b));
    kept
}

/// Minimal transversals (minimal vertex covers) of a hypergraph.
///
/// Berge's incremental algorithm: the covers of the first `k` edges are
/// extended edge by edge and re-minimized. An empty hypergraph has the empty
/// set as its only minimal cover; a hypergraph with an empty edge has none.
pub fn minimal_transversals(edges: &[Mask]) -> Vec<Mask> {
    let mut edges = minimal(edges.iter().copied());
    if edges.first() == Some(&0) {
        return Vec::new();
    }
    edges.sort_unstable_by_key(|e| size(*e));
    let mut covers: Vec<Mask> = vec![0];
    for &edge in &edges {
        let mut next = Vec::with_capacity(covers.len() * 2);
        for &c in &covers {
            if c & edge != 0 {
                next.push(c);
            } else {
                let mut rest = edge;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    next.push(c | low);
                    rest &= rest - 1;
                }
            }
        }
        covers = minimal(next);
    }
    covers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_covers(n: usize, edges: &[Mask]) -> Vec<Mask> {
        let covers = (0..=full(n)).filter(|&c| edges.iter().all(|&e| e & c != 0));
        minimal(covers)
    }

    #[test]
    fn vertices_round_trip() {
        let m = from_vertices([1, 3, 7]);
        assert_eq!(vertices(m), vec![1, 3, 7]);
        assert_eq!(format_set(m), "{1,3,7}");
        assert_eq!(format_set(0), "{}");
    }

    #[test]
    fn submask_count() {
        assert_eq!(submasks(0b1011).count(), 8);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn transversals_match_brute_force() {
        let cases: Vec<(usize, Vec<Mask>)> = vec![
            (3, vec![0b011, 0b101]),
            (5, vec![0b00101, 0b01001, 0b10001, 0b00110, 0b01010, 0b10010, 0b01100, 0b10100]),
            (4, vec![0b0101, 0b1001, 0b0110, 0b1010]),
            (4, vec![]),
        ];
        for (n, edges) in cases {
            assert_eq!(minimal_transversals(&edges), brute_force_covers(n, &edges));
        }
        assert!(minimal_transversals(&[0]).is_empty());
    }
}
