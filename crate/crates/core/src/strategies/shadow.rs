//! Playing on a retract. The cops run an inner strategy on `G[H]` against
//! the robber's image `φ(r)`; once a cop can step onto the image it keeps
//! sitting on it, which pins the robber inside its clique of `G - H`, and
//! the other cop walks in.

use crate::game::{Contradiction, Decision, Strategy};
use crate::graph::Graph;

use super::common::{capture_move, ensure, hash_of};
use super::retract::Retraction;

#[derive(Clone, Copy, Debug, Hash, PartialEq, Eq)]
enum Phase {
    Chase,
    /// Cop `i` sits on the robber's image.
    Mirror(usize),
}

#[derive(Clone)]
pub struct Shadow {
    g: Graph,
    ret: Retraction,
    inner: Box<dyn Strategy>,
    name: String,
    /// Host vertex of each inner vertex.
    host_of: Vec<usize>,
    /// Inner vertex of each host vertex in `H`.
    inner_of: Vec<usize>,
    phase: Phase,
    last_image: Option<usize>,
}

impl Shadow {
    /// `inner` must play on `ret.image_graph()`.
    pub fn new(ret: Retraction, inner: Box<dyn Strategy>) -> Shadow {
        let g = ret.host().clone();
        let host_of = ret.image().to_vec();
        let mut inner_of = vec![usize::MAX; g.n()];
        for (i, &v) in host_of.iter().enumerate() {
            inner_of[v] = i;
        }
        let name = match inner.name().strip_prefix("shadow/") {
            Some(_) => inner.name().to_string(),
            None => format!("shadow/{}", inner.name()),
        };
        Shadow {
            g,
            ret,
            inner,
            name,
            host_of,
            inner_of,
            phase: Phase::Chase,
            last_image: None,
        }
    }

    pub fn retraction(&self) -> &Retraction {
        &self.ret
    }

    fn to_host(&self, d: Decision) -> Decision {
        Decision::new(d.cops.iter().map(|&c| self.host_of[c]).collect(), d.note)
    }

    /// Keep cop `i` on `image` and walk the others towards the robber's
    /// component of `G - H`.
    fn mirror(&self, cops: &[usize], i: usize, image: usize, robber: usize) -> Result<Decision, Contradiction> {
        let g = &self.g;
        let rest = g.vertices() - self.ret.image();
        ensure(rest.contains(robber), "shadow.mirror.residual", || {
            format!("robber at {robber} in H with its image uncaught")
        })?;
        let k = g.component_of(robber, rest);
        let mut next = cops.to_vec();
        next[i] = image;
        for (j, c) in cops.iter().copied().enumerate() {
            if j == i {
                continue;
            }
            let d = g.distance(c, k).ok_or_else(|| {
                Contradiction::new("shadow.walk", format!("cop at {c} cannot reach {k}"))
            })?;
            next[j] = g
                .neighbors(c)
                .iter()
                .find(|&w| g.distance(w, k) == Some(d - 1))
                .unwrap_or(c);
        }
        Ok(Decision::new(next, format!("shadow: cop {} on image {image}, others walk to {k}", i + 1)))
    }
}

impl Strategy for Shadow {
    fn name(&self) -> &str {
        &self.name
    }

    fn cops(&self) -> usize {
        self.inner.cops()
    }

    fn place(&mut self) -> Result<Decision, Contradiction> {
        let d = self.inner.place()?;
        Ok(self.to_host(d))
    }

    fn respond(&mut self, cops: &[usize], robber: usize) -> Result<Decision, Contradiction> {
        let image = self.ret.apply(robber);
        if let Some(prev) = self.last_image {
            ensure(
                prev == image || self.g.has_edge(prev, image),
                "shadow.mirror-legality",
                || format!("image moved from {prev} to {image}"),
            )?;
        }
        self.last_image = Some(image);
        if let Some(d) = capture_move(&self.g, cops, robber) {
            return Ok(d);
        }
        if let Phase::Mirror(i) = self.phase {
            return self.mirror(cops, i, image, robber);
        }
        if let Some(i) = cops
            .iter()
            .position(|&c| self.g.closed_neighbors(c).contains(image))
        {
            self.phase = Phase::Mirror(i);
            return self.mirror(cops, i, image, robber);
        }
        let inner_cops: Vec<usize> = cops.iter().map(|&c| self.inner_of[c]).collect();
        ensure(
            inner_cops.iter().all(|&c| c != usize::MAX),
            "shadow.cops-in-H",
            || format!("cops at {cops:?} left H during the chase"),
        )?;
        let d = self.inner.respond(&inner_cops, self.inner_of[image])?;
        Ok(self.to_host(d))
    }

    fn fingerprint(&self) -> u64 {
        hash_of(&(self.phase, self.last_image, self.inner.fingerprint()))
    }

    fn boxed_clone(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

pub fn shadow_strategy(ret: Retraction, inner: Box<dyn Strategy>) -> Box<dyn Strategy> {
    Box::new(Shadow::new(ret, inner))
}
