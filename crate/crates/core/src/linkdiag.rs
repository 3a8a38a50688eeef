//! Oriented link diagrams in PD notation.
//!
//! A crossing is `X[a,b,c,d]`: the four incident edge labels listed clockwise,
//! starting from the incoming under-strand. The under strand runs `a -> c`.
//! The crossing is positive when the over strand runs `b -> d` and negative
//! when it runs `d -> b`. Orientation of the over strand is inferred from the
//! under-strand data; where it is not forced (a component that is never an
//! under strand) `Xp[..]`/`Xm[..]` pin the sign explicitly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("edge label {label} occurs {count} times (expected 2)")]
    LabelCount { label: u32, count: usize },
    #[error("inconsistent orientation at edge {0}")]
    Orientation(u32),
    #[error("diagram is not planar")]
    NonPlanar,
    #[error("braid generator {gen} out of range for {strands} strands")]
    BraidGenerator { gen: i64, strands: usize },
    #[error("diagram has no components")]
    Empty,
}

pub type Result<T> = std::result::Result<T, DiagramError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub labels: [u32; 4],
    /// +1 or -1.
    pub sign: i8,
}

impl Crossing {
    /// Slots where the oriented strands enter.
    pub fn in_slots(&self) -> [usize; 2] {
        if self.sign > 0 {
            [0, 1]
        } else {
            [0, 3]
        }
    }

    pub fn out_slots(&self) -> [usize; 2] {
        if self.sign > 0 {
            [2, 3]
        } else {
            [2, 1]
        }
    }

    pub fn is_in_slot(&self, pos: usize) -> bool {
        self.in_slots().contains(&pos)
    }

    /// The same crossing with the over and under strands exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.labels;
        if self.sign > 0 {
            Crossing { labels: [b, c, d, a], sign: -1 }
        } else {
            Crossing { labels: [d, a, b, c], sign: 1 }
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    unknot_count: usize,
    pub name: Option<String>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, o: &Self) -> bool {
        self.crossings == o.crossings && self.unknot_count == o.unknot_count
    }
}

impl Eq for LinkDiagram {}

impl Hash for LinkDiagram {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.crossings.hash(h);
        self.unknot_count.hash(h);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramStats {
    pub components: usize,
    pub writhe: i64,
    pub crossings: usize,
}

#[derive(Debug, Clone)]
pub struct SkeinSite {
    pub diagram: LinkDiagram,
    pub crossing_index: usize,
}

/// Endpoints of an oriented edge: (crossing index, slot).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub label: u32,
    pub tail: (usize, usize),
    pub head: (usize, usize),
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            let nx = self.parent[x];
            self.parent[x] = r;
            x = nx;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Build a diagram from signed crossings with arbitrary labels, after
/// identifying the label pairs in `merges`. Label classes left without any
/// crossing occurrence become crossingless circles.
fn from_raw(crossings: &[Crossing], merges: &[(u32, u32)], unknots: usize) -> Result<LinkDiagram> {
    let mut ids: BTreeMap<u32, usize> = BTreeMap::new();
    for c in crossings {
        for l in c.labels {
            let n = ids.len();
            ids.entry(l).or_insert(n);
        }
    }
    for &(x, y) in merges {
        for l in [x, y] {
            let n = ids.len();
            ids.entry(l).or_insert(n);
        }
    }
    let mut uf = UnionFind::new(ids.len());
    for &(x, y) in merges {
        uf.union(ids[&x], ids[&y]);
    }
    let mut used = vec![false; ids.len()];
    let mut out = Vec::with_capacity(crossings.len());
    for c in crossings {
        let mut labels = [0u32; 4];
        for (k, l) in c.labels.iter().enumerate() {
            let r = uf.find(ids[l]);
            used[r] = true;
            labels[k] = r as u32 + 1;
        }
        out.push(Crossing { labels, sign: c.sign });
    }
    let mut circles = unknots;
    for i in 0..ids.len() {
        if uf.find(i) == i && !used[i] {
            circles += 1;
        }
    }
    LinkDiagram::new(out, circles)
}

impl LinkDiagram {
    /// Validate signed crossings and normalize labels.
    pub fn new(crossings: Vec<Crossing>, unknot_count: usize) -> Result<Self> {
        check_signed(&crossings)?;
        if crossings.is_empty() && unknot_count == 0 {
            return Err(DiagramError::Empty);
        }
        let mut d = LinkDiagram { crossings, unknot_count, name: None };
        d.normalize();
        Ok(d)
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn unlink(k: usize) -> Self {
        LinkDiagram { crossings: vec![], unknot_count: k, name: None }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn unknot_count(&self) -> usize {
        self.unknot_count
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Disjoint union with `k` further crossingless unknots.
    pub fn with_extra_unknots(&self, k: usize) -> Self {
        let mut d = self.clone();
        d.unknot_count += k;
        d
    }

    pub fn mirror(&self) -> Self {
        let cs = self.crossings.iter().map(|c| c.switched()).collect();
        let mut d = Self::new(cs, self.unknot_count).expect("mirror stays valid");
        d.name = self.name.clone();
        d
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut tail: HashMap<u32, (usize, usize)> = HashMap::new();
        let mut head: HashMap<u32, (usize, usize)> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for p in 0..4 {
                if c.is_in_slot(p) {
                    head.insert(c.labels[p], (i, p));
                } else {
                    tail.insert(c.labels[p], (i, p));
                }
            }
        }
        let mut v: Vec<Edge> = head.iter().map(|(&l, &h)| Edge { label: l, tail: tail[&l], head: h }).collect();
        v.sort_by_key(|e| e.label);
        v
    }

    /// Labels of each crossed component in traversal order.
    pub fn components(&self) -> Vec<Vec<u32>> {
        traverse(&self.crossings)
    }

    pub fn stats(&self) -> DiagramStats {
        DiagramStats {
            components: self.components().len() + self.unknot_count,
            writhe: self.crossings.iter().map(|c| c.sign as i64).sum(),
            crossings: self.crossings.len(),
        }
    }

    /// Relabel 1..2c along the orientation, components ordered by their
    /// smallest current label, then sort the crossing list.
    fn normalize(&mut self) {
        let comps = traverse(&self.crossings);
        let mut map: HashMap<u32, u32> = HashMap::new();
        let mut next = 1;
        for comp in &comps {
            for &l in comp {
                map.insert(l, next);
                next += 1;
            }
        }
        for c in &mut self.crossings {
            for l in &mut c.labels {
                *l = map[l];
            }
        }
        self.crossings.sort();
    }

    pub fn switch(&self, i: usize) -> Self {
        let mut cs = self.crossings.clone();
        cs[i] = cs[i].switched();
        Self::new(cs, self.unknot_count).expect("switch stays valid")
    }

    /// Oriented resolution at crossing `i`.
    pub fn smooth(&self, i: usize) -> Self {
        let c = self.crossings[i];
        let [a, b, cc, d] = c.labels;
        let merges = if c.sign > 0 { [(a, d), (b, cc)] } else { [(a, b), (d, cc)] };
        let mut rest = self.crossings.clone();
        rest.remove(i);
        from_raw(&rest, &merges, self.unknot_count).expect("smoothing stays valid")
    }

    /// Remove first-Reidemeister kinks and bigons of the second move until none remain.
    pub fn simplify(&self) -> Self {
        let mut d = self.clone();
        while let Some(next) = d.simplify_once() {
            d = next;
        }
        d.name = self.name.clone();
        d
    }

    fn simplify_once(&self) -> Option<Self> {
        let cs = &self.crossings;
        for (i, c) in cs.iter().enumerate() {
            for p in 0..4 {
                if c.labels[p] == c.labels[(p + 1) % 4] {
                    let x = c.labels[p];
                    let merges = [(x, c.labels[(p + 2) % 4]), (x, c.labels[(p + 3) % 4])];
                    let mut rest = cs.clone();
                    rest.remove(i);
                    return Some(from_raw(&rest, &merges, self.unknot_count).expect("R1 stays valid"));
                }
            }
        }
        let mut at: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (i, c) in cs.iter().enumerate() {
            for p in 0..4 {
                at.entry(c.labels[p]).or_default().push((i, p));
            }
        }
        for (x, cx) in cs.iter().enumerate() {
            for pe in [1usize, 3] {
                let e = cx.labels[pe];
                let Some(&(y, qe)) = at[&e].iter().find(|&&(k, _)| k != x) else { continue };
                if qe % 2 == 0 {
                    continue;
                }
                let cy = &cs[y];
                for (pf, qf) in [((pe + 1) % 4, (qe + 3) % 4), ((pe + 3) % 4, (qe + 1) % 4)] {
                    let f = cx.labels[pf];
                    if cy.labels[qf] != f || f == e {
                        continue;
                    }
                    let merges = [
                        (e, cx.labels[(pe + 2) % 4]),
                        (e, cy.labels[(qe + 2) % 4]),
                        (f, cx.labels[(pf + 2) % 4]),
                        (f, cy.labels[(qf + 2) % 4]),
                    ];
                    let rest: Vec<Crossing> =
                        cs.iter().enumerate().filter(|(k, _)| *k != x && *k != y).map(|(_, c)| *c).collect();
                    return Some(from_raw(&rest, &merges, self.unknot_count).expect("R2 stays valid"));
                }
            }
        }
        None
    }

    /// Switched and smoothed diagrams at a crossing, both simplified.
    pub fn skein_resolve(&self, i: usize) -> (Self, Self) {
        let (s, z) = self.resolve_raw(i);
        (s.simplify(), z.simplify())
    }

    pub fn resolve_raw(&self, i: usize) -> (Self, Self) {
        (self.switch(i), self.smooth(i))
    }

    /// First crossing met as an under strand when each component is walked
    /// from its basepoint (smallest label), components in label order.
    pub fn first_ascending(&self) -> Option<usize> {
        let mut head: HashMap<u32, (usize, usize)> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for p in c.in_slots() {
                head.insert(c.labels[p], (i, p));
            }
        }
        let mut seen = vec![false; self.crossings.len()];
        for comp in self.components() {
            for l in comp {
                let (i, p) = head[&l];
                if !seen[i] {
                    seen[i] = true;
                    if p == 0 {
                        return Some(i);
                    }
                }
            }
        }
        None
    }

    pub fn to_pd_string(&self) -> String {
        let forced = infer_signs(&self.crossings.iter().map(|c| (c.labels, None)).collect::<Vec<_>>())
            .ok();
        let mut parts = Vec::new();
        for (i, c) in self.crossings.iter().enumerate() {
            let explicit = match &forced {
                Some(v) => !(v[i].1 && v[i].0 == c.sign),
                None => true,
            };
            let tag = match (explicit, c.sign > 0) {
                (false, _) => "X",
                (true, true) => "Xp",
                (true, false) => "Xm",
            };
            let [a, b, cc, d] = c.labels;
            parts.push(format!("{tag}[{a},{b},{cc},{d}]"));
        }
        let mut out = if parts.is_empty() { String::new() } else { format!("PD[{}]", parts.join(",")) };
        for _ in 0..self.unknot_count {
            if out.is_empty() {
                out.push('U');
            } else {
                out.push_str(" ⊔ U");
            }
        }
        out
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pd_string())
    }
}

fn check_signed(cs: &[Crossing]) -> Result<()> {
    let mut count: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for c in cs {
        if c.sign != 1 && c.sign != -1 {
            return Err(DiagramError::Orientation(c.labels[0]));
        }
        for p in 0..2 {
            if c.labels[p] == c.labels[p + 2] {
                return Err(DiagramError::NonPlanar);
            }
        }
        for p in 0..4 {
            let e = count.entry(c.labels[p]).or_default();
            if c.is_in_slot(p) {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
    }
    for (&l, &(i, o)) in &count {
        if i + o != 2 {
            return Err(DiagramError::LabelCount { label: l, count: i + o });
        }
        if i != 1 {
            return Err(DiagramError::Orientation(l));
        }
    }
    if !is_planar(cs) {
        return Err(DiagramError::NonPlanar);
    }
    Ok(())
}

/// Euler characteristic of the rotation system: faces = crossings + 2 * (connected pieces).
fn is_planar(cs: &[Crossing]) -> bool {
    let n = cs.len();
    if n == 0 {
        return true;
    }
    let mut ends: HashMap<u32, Vec<usize>> = HashMap::new();
    for (i, c) in cs.iter().enumerate() {
        for p in 0..4 {
            ends.entry(c.labels[p]).or_default().push(4 * i + p);
        }
    }
    let other = |dart: usize| -> usize {
        let v = &ends[&cs[dart / 4].labels[dart % 4]];
        if v[0] == dart {
            v[1]
        } else {
            v[0]
        }
    };
    let mut seen = vec![false; 4 * n];
    let mut faces = 0;
    for start in 0..4 * n {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            let o = other(d);
            d = 4 * (o / 4) + (o % 4 + 1) % 4;
        }
    }
    let mut uf = UnionFind::new(n);
    for v in ends.values() {
        uf.union(v[0] / 4, v[1] / 4);
    }
    let pieces = (0..n).filter(|&i| uf.find(i) == i).count();
    faces == n + 2 * pieces
}

fn traverse(cs: &[Crossing]) -> Vec<Vec<u32>> {
    let mut head: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for (i, c) in cs.iter().enumerate() {
        for p in c.in_slots() {
            head.insert(c.labels[p], (i, p));
        }
    }
    let mut done: BTreeMap<u32, bool> = head.keys().map(|&l| (l, false)).collect();
    let mut comps = Vec::new();
    let labels: Vec<u32> = head.keys().copied().collect();
    for start in labels {
        if done[&start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut l = start;
        loop {
            done.insert(l, true);
            comp.push(l);
            let (i, p) = head[&l];
            l = cs[i].labels[(p + 2) % 4];
            if l == start {
                break;
            }
        }
        comps.push(comp);
    }
    comps
}

/// Sign per crossing and whether it was forced by under-strand data (as
/// opposed to an explicit token or the label tiebreak).
fn infer_signs(raw: &[([u32; 4], Option<i8>)]) -> Result<Vec<(i8, bool)>> {
    let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (i, (ls, _)) in raw.iter().enumerate() {
        for p in 0..4 {
            occ.entry(ls[p]).or_default().push((i, p));
        }
    }
    let mut labels: Vec<u32> = occ.keys().copied().collect();
    labels.sort();
    for &l in &labels {
        let n = occ[&l].len();
        if n != 2 {
            return Err(DiagramError::LabelCount { label: l, count: n });
        }
    }
    // direction of each occurrence slot: Some(true) = incoming
    let mut sign: Vec<Option<i8>> = vec![None; raw.len()];
    let mut forced = vec![false; raw.len()];
    let slot_in = |s: i8, p: usize| -> bool {
        match p {
            0 => true,
            2 => false,
            1 => s > 0,
            _ => s < 0,
        }
    };
    // queue of (crossing, slot, required incoming?)
    let mut queue: Vec<(usize, usize, bool, bool)> = Vec::new();
    for (i, (ls, _)) in raw.iter().enumerate() {
        for p in [0usize, 2] {
            let l = ls[p];
            let &(j, q) = occ[&l].iter().find(|&&(j, q)| (j, q) != (i, p)).unwrap();
            queue.push((j, q, p == 2, true));
        }
    }
    let apply = |queue: &mut Vec<(usize, usize, bool, bool)>, sign: &mut Vec<Option<i8>>, forced: &mut Vec<bool>| -> Result<()> {
        while let Some((j, q, want_in, f)) = queue.pop() {
            let l = raw[j].0[q];
            if q % 2 == 0 {
                if (q == 0) != want_in {
                    return Err(DiagramError::Orientation(l));
                }
                continue;
            }
            let s: i8 = if (q == 1) == want_in { 1 } else { -1 };
            match sign[j] {
                Some(old) if old != s => return Err(DiagramError::Orientation(l)),
                Some(_) => {}
                None => {
                    sign[j] = Some(s);
                    forced[j] = f;
                    for p in [1usize, 3] {
                        let l2 = raw[j].0[p];
                        let &(k, r) = occ[&l2].iter().find(|&&(k, r)| (k, r) != (j, p)).unwrap();
                        queue.push((k, r, !slot_in(s, p), f));
                    }
                }
            }
        }
        Ok(())
    };
    apply(&mut queue, &mut sign, &mut forced)?;
    for (i, (_, explicit)) in raw.iter().enumerate() {
        if let Some(s) = explicit {
            match sign[i] {
                Some(old) if old != *s => return Err(DiagramError::Orientation(raw[i].0[1])),
                Some(_) => {}
                None => {
                    queue.push((i, 1, *s > 0, false));
                    apply(&mut queue, &mut sign, &mut forced)?;
                }
            }
        }
    }
    for i in 0..raw.len() {
        if sign[i].is_none() {
            let [_, b, _, d] = raw[i].0;
            let b_to_d = d == b + 1 || b > d + 1;
            queue.push((i, 1, b_to_d, false));
            apply(&mut queue, &mut sign, &mut forced)?;
        }
    }
    Ok(sign.into_iter().map(|s| s.unwrap()).zip(forced).collect())
}

struct Lexer<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(DiagramError::Syntax { pos: self.pos, msg: msg.to_string() })
    }

    fn ws(&mut self) {
        let rest = &self.s[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.ws();
        if self.s[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(&format!("expected `{tok}`"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let rest = &self.s[self.pos..];
        let neg = rest.starts_with('-');
        let body = if neg { &rest[1..] } else { rest };
        let n = body.bytes().take_while(|b| b.is_ascii_digit()).count();
        if n == 0 {
            return self.err("expected integer");
        }
        let v: i64 = body[..n].parse().map_err(|_| DiagramError::Syntax { pos: self.pos, msg: "integer too large".into() })?;
        self.pos += n + neg as usize;
        Ok(if neg { -v } else { v })
    }

    fn at_end(&mut self) -> bool {
        self.ws();
        self.pos == self.s.len()
    }
}

fn parse_unknot_suffix(lx: &mut Lexer) -> Result<usize> {
    let mut k = 0;
    while !lx.at_end() {
        if !(lx.eat("⊔") || lx.eat("+")) {
            return lx.err("expected `⊔ U`");
        }
        lx.expect("U")?;
        k += 1;
    }
    Ok(k)
}

/// `PD[X[a,b,c,d], ...]`, optionally followed by `⊔ U` tokens, or `U (⊔ U)*`.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut lx = Lexer { s: text, pos: 0 };
    if lx.eat("U") {
        let k = 1 + parse_unknot_suffix(&mut lx)?;
        return Ok(LinkDiagram::unlink(k));
    }
    lx.expect("PD[")?;
    let mut raw: Vec<([u32; 4], Option<i8>)> = Vec::new();
    if !lx.eat("]") {
        loop {
            let explicit = if lx.eat("Xp[") {
                Some(1)
            } else if lx.eat("Xm[") {
                Some(-1)
            } else {
                lx.expect("X[")?;
                None
            };
            let mut ls = [0u32; 4];
            for (k, slot) in ls.iter_mut().enumerate() {
                if k > 0 {
                    lx.expect(",")?;
                }
                let v = lx.int()?;
                if v <= 0 || v > u32::MAX as i64 {
                    return lx.err("edge labels must be positive integers");
                }
                *slot = v as u32;
            }
            lx.expect("]")?;
            raw.push((ls, explicit));
            if lx.eat("]") {
                break;
            }
            lx.expect(",")?;
        }
    }
    let k = parse_unknot_suffix(&mut lx)?;
    let signs = infer_signs(&raw)?;
    let cs = raw.iter().zip(signs).map(|((ls, _), (s, _))| Crossing { labels: *ls, sign: s }).collect();
    LinkDiagram::new(cs, k)
}

/// Closure of a braid word; generator `i` is sigma_i, `-i` its inverse.
pub fn parse_braid(word: &[i64], strands: usize) -> Result<LinkDiagram> {
    if strands == 0 {
        return Err(DiagramError::Empty);
    }
    let mut cur: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32 + 1;
    let mut cs = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(DiagramError::BraidGenerator { gen: g, strands });
        }
        let (il, ir) = (cur[i - 1], cur[i]);
        let (ol, or) = (next, next + 1);
        next += 2;
        let c = if g > 0 {
            Crossing { labels: [ir, il, ol, or], sign: 1 }
        } else {
            Crossing { labels: [il, ol, or, ir], sign: -1 }
        };
        cs.push(c);
        cur[i - 1] = ol;
        cur[i] = or;
    }
    let merges: Vec<(u32, u32)> = cur.iter().enumerate().map(|(k, &l)| (l, k as u32 + 1)).collect();
    from_raw(&cs, &merges, 0)
}

/// `BR[strands; g1 g2 ...]` (commas between generators also accepted).
pub fn parse_braid_text(text: &str) -> Result<LinkDiagram> {
    let mut lx = Lexer { s: text, pos: 0 };
    lx.expect("BR[")?;
    let strands = lx.int()?;
    if strands <= 0 {
        return lx.err("strand count must be positive");
    }
    if !(lx.eat(";") || lx.eat(",")) {
        return lx.err("expected `;`");
    }
    let braced = lx.eat("{");
    let mut word = Vec::new();
    loop {
        lx.ws();
        if lx.eat("]") || (braced && lx.eat("}")) {
            break;
        }
        word.push(lx.int()?);
        lx.eat(",");
    }
    if braced {
        lx.expect("]")?;
    }
    let k = parse_unknot_suffix(&mut lx)?;
    Ok(parse_braid(&word, strands as usize)?.with_extra_unknots(k))
}

/// Either notation.
pub fn parse_link(text: &str) -> Result<LinkDiagram> {
    let t = text.trim();
    if t.starts_with("BR") {
        parse_braid_text(t)
    } else {
        parse_pd(t)
    }
}
