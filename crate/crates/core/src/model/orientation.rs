use super::instance::{EdgeId, Instance, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrientationError {
    #[error("orientation has {found} edges but the instance has {expected}")]
    EdgeCount { expected: usize, found: usize },
    #[error("edge {edge} is directed to {receiver}, which is not one of its endpoints")]
    NotAnEndpoint { edge: EdgeId, receiver: VertexId },
}

/// Direction of every edge, stored as the receiving endpoint per edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    receiver: Vec<VertexId>,
}

impl Orientation {
    pub fn from_receivers(inst: &Instance, receiver: Vec<VertexId>) -> Result<Self, OrientationError> {
        let o = Orientation { receiver };
        o.check(inst)?;
        Ok(o)
    }

    pub(crate) fn from_receivers_unchecked(receiver: Vec<VertexId>) -> Self {
        Orientation { receiver }
    }

    /// Every edge toward its larger endpoint.
    pub fn toward_larger(inst: &Instance) -> Self {
        Orientation { receiver: inst.edges().iter().map(|e| e.v).collect() }
    }

    pub fn check(&self, inst: &Instance) -> Result<(), OrientationError> {
        if self.receiver.len() != inst.m() {
            return Err(OrientationError::EdgeCount { expected: inst.m(), found: self.receiver.len() });
        }
        for (edge, &r) in self.receiver.iter().enumerate() {
            if !inst.edge(edge).touches(r) {
                return Err(OrientationError::NotAnEndpoint { edge, receiver: r });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.receiver.len()
    }

    pub fn is_empty(&self) -> bool {
        self.receiver.is_empty()
    }

    pub fn receiver(&self, e: EdgeId) -> VertexId {
        self.receiver[e]
    }

    pub fn giver(&self, inst: &Instance, e: EdgeId) -> VertexId {
        inst.edge(e).other(self.receiver[e])
    }

    pub fn set(&mut self, e: EdgeId, r: VertexId) {
        self.receiver[e] = r;
    }

    pub fn receivers(&self) -> &[VertexId] {
        &self.receiver
    }

    /// Bundle of every vertex, edge ids ascending.
    pub fn bundles(&self, n: usize) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); n];
        for (e, &r) in self.receiver.iter().enumerate() {
            out[r].push(e);
        }
        out
    }
}
