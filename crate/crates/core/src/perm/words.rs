use super::Permutation;

impl Permutation {
    /// All reduced words, sorted lexicographically.
    ///
    /// Built from the right: every word of `w s_i` for a right descent `i`,
    /// followed by `i`.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in self.descents() {
            for mut word in self.swap_positions(i).reduced_words() {
                word.push(i);
                out.push(word);
            }
        }
        out.sort();
        out
    }
}

/// Sequences `b` with `1 <= b_1 <= b_2 <= ...`, `b_j <= a_j`, and
/// `b_j < b_{j+1}` whenever `a_j < a_{j+1}`. Sorted lexicographically.
pub fn compatible_sequences(a: &[usize]) -> Vec<Vec<usize>> {
    fn go(a: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = cur.len();
        if j == a.len() {
            out.push(cur.clone());
            return;
        }
        let lo = match cur.last() {
            None => 1,
            Some(&prev) if a[j - 1] < a[j] => prev + 1,
            Some(&prev) => prev,
        };
        for b in lo..=a[j] {
            cur.push(b);
            go(a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(a, &mut Vec::new(), &mut out);
    out
}
