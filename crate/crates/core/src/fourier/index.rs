use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::quadform::{canonical_forms, enumerate_forms, reduce, HalfIntegralForm};

/// Dense lookup from every form of trace `<= max_trace` to its class
/// position and reduction sign. Shared between expansions of equal
/// truncation.
#[derive(Debug)]
pub(crate) struct FormIndex {
    max_trace: u64,
    classes: Vec<HalfIntegralForm>,
    position: HashMap<HalfIntegralForm, usize>,
    // (r, s, b + T) -> 0 for "not in the index set", otherwise
    // +-(position + 1) with the sign of the reducing determinant.
    table: Vec<i32>,
}

impl FormIndex {
    pub fn get(max_trace: u64) -> Arc<FormIndex> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FormIndex>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(ix) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&max_trace) {
            return ix.clone();
        }
        let built = Arc::new(FormIndex::build(max_trace));
        cache
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .entry(max_trace)
            .or_insert(built)
            .clone()
    }

    fn build(max_trace: u64) -> FormIndex {
        let classes = canonical_forms(max_trace);
        let position: HashMap<_, _> = classes.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let t = max_trace as usize;
        let mut table = vec![0i32; (t + 1) * (t + 1) * (2 * t + 1)];
        for n in enumerate_forms(max_trace) {
            let class = reduce(&n);
            let pos = position[&class.canonical] as i32 + 1;
            table[Self::offset(t, &n)] = if class.sign < 0 { -pos } else { pos };
        }
        FormIndex {
            max_trace,
            classes,
            position,
            table,
        }
    }

    fn offset(t: usize, n: &HalfIntegralForm) -> usize {
        (n.r() as usize * (t + 1) + n.s() as usize) * (2 * t + 1) + (n.b() + t as i64) as usize
    }

    pub fn max_trace(&self) -> u64 {
        self.max_trace
    }

    pub fn classes(&self) -> &[HalfIntegralForm] {
        &self.classes
    }

    pub fn position(&self, canonical: &HalfIntegralForm) -> Option<usize> {
        self.position.get(canonical).copied()
    }

    /// Table lookup for forms of trace `<= max_trace`.
    #[inline]
    pub fn slot(&self, n: &HalfIntegralForm) -> Option<(usize, i8)> {
        if n.trace() > self.max_trace {
            return None;
        }
        self.slot_rbs(n.r(), n.b(), n.s())
    }

    /// Same as [`Self::slot`] for a raw psd triple with `r + s <= max_trace`.
    #[inline]
    pub fn slot_rbs(&self, r: i64, b: i64, s: i64) -> Option<(usize, i8)> {
        let t = self.max_trace as usize;
        let v = self.table[Self::offset(t, &HalfIntegralForm::new_unchecked(r, b, s))];
        match v {
            0 => None,
            v if v > 0 => Some((v as usize - 1, 1)),
            v => Some(((-v) as usize - 1, -1)),
        }
    }
}
