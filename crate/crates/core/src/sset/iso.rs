use super::{CellId, EzForm, SSetMap, TruncatedSSet};

/// A verified isomorphism, as a dimension-wise bijection.
pub type IsoFamily = SSetMap;

struct Search<'a> {
    x: &'a TruncatedSSet,
    y: &'a TruncatedSSet,
    ez: Vec<Vec<EzForm>>,
    order: Vec<(usize, CellId)>,
    assign: Vec<Vec<Option<CellId>>>,
    used: Vec<Vec<bool>>,
}

impl Search<'_> {
    fn image(&self, k: usize, c: CellId) -> CellId {
        let form = &self.ez[k][c];
        let base = self.assign[form.dim][form.base].expect("lower dimensions are assigned first");
        if form.dim == k {
            base
        } else {
            self.y.act(form.dim, base, &form.surjection)
        }
    }

    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return self.finish().is_some();
        }
        let (k, c) = self.order[pos];
        let candidates: Vec<CellId> = if k == 0 {
            (0..self.y.count(0)).collect()
        } else {
            let faces: Vec<CellId> = (0..=k).map(|i| self.image(k - 1, self.x.face(k, i, c))).collect();
            self.y.cells_with_boundary(k, &faces).to_vec()
        };
        for t in candidates {
            if self.used[k][t] || self.y.is_degenerate(k, t) {
                continue;
            }
            self.assign[k][c] = Some(t);
            self.used[k][t] = true;
            if self.run(pos + 1) {
                return true;
            }
            self.used[k][t] = false;
            self.assign[k][c] = None;
        }
        false
    }

    fn finish(&self) -> Option<SSetMap> {
        let map = SSetMap::new(
            (0..=self.x.cap()).map(|k| (0..self.x.count(k)).map(|c| self.image(k, c)).collect()).collect(),
        );
        (map.is_bijective(self.y) && map.validate(self.x, self.y).is_ok()).then_some(map)
    }
}

/// Searches for an isomorphism `X ≅ Y`, matching nondegenerate cells in
/// ascending dimension with face-image pruning. `None` means the search was
/// exhaustive.
pub fn sset_iso(x: &TruncatedSSet, y: &TruncatedSSet) -> Option<IsoFamily> {
    if x.cap() != y.cap() || x.counts() != y.counts() || x.nondegenerate_counts() != y.nondegenerate_counts() {
        return None;
    }
    let cap = x.cap();
    let ez: Vec<Vec<EzForm>> = (0..=cap).map(|k| (0..x.count(k)).map(|c| x.ez(k, c)).collect()).collect();
    let order: Vec<(usize, CellId)> =
        (0..=cap).flat_map(|k| x.nondegenerate(k).into_iter().map(move |c| (k, c))).collect();
    let mut search = Search {
        x,
        y,
        ez,
        order,
        assign: (0..=cap).map(|k| vec![None; x.count(k)]).collect(),
        used: (0..=cap).map(|k| vec![false; y.count(k)]).collect(),
    };
    if search.run(0) {
        search.finish()
    } else {
        None
    }
}

/// Every simplicial map `X -> Y`, by the same ascending search without the
/// injectivity constraint.
pub fn all_sset_maps(x: &TruncatedSSet, y: &TruncatedSSet) -> Vec<SSetMap> {
    if x.cap() != y.cap() {
        return Vec::new();
    }
    let cap = x.cap();
    let ez: Vec<Vec<EzForm>> = (0..=cap).map(|k| (0..x.count(k)).map(|c| x.ez(k, c)).collect()).collect();
    let order: Vec<(usize, CellId)> =
        (0..=cap).flat_map(|k| x.nondegenerate(k).into_iter().map(move |c| (k, c))).collect();
    let mut search = Search {
        x,
        y,
        ez,
        order,
        assign: (0..=cap).map(|k| vec![None; x.count(k)]).collect(),
        used: Vec::new(),
    };
    let mut out = Vec::new();
    collect_maps(&mut search, 0, &mut out);
    out
}

fn collect_maps(s: &mut Search<'_>, pos: usize, out: &mut Vec<SSetMap>) {
    if pos == s.order.len() {
        let map = SSetMap::new((0..=s.x.cap()).map(|k| (0..s.x.count(k)).map(|c| s.image(k, c)).collect()).collect());
        if map.validate(s.x, s.y).is_ok() {
            out.push(map);
        }
        return;
    }
    let (k, c) = s.order[pos];
    let candidates: Vec<CellId> = if k == 0 {
        (0..s.y.count(0)).collect()
    } else {
        let faces: Vec<CellId> = (0..=k).map(|i| s.image(k - 1, s.x.face(k, i, c))).collect();
        s.y.cells_with_boundary(k, &faces).to_vec()
    };
    for t in candidates {
        s.assign[k][c] = Some(t);
        collect_maps(s, pos + 1, out);
    }
    s.assign[k][c] = None;
}
