use super::{Time, TimeWindow, VertexId, INF, NEG_INF};
use crate::{Error, Result};

/// Beer vertices `b_1..b_k` and, for each, the strictly increasing list of
/// instants at which it is open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeerConfig {
    vertices: Vec<VertexId>,
    active: Vec<Vec<Time>>,
    slot: Vec<Option<usize>>,
}

impl BeerConfig {
    pub fn new(n: usize, entries: Vec<(VertexId, Vec<Time>)>) -> Result<Self> {
        let mut slot = vec![None; n];
        let mut vertices = Vec::with_capacity(entries.len());
        let mut active = Vec::with_capacity(entries.len());
        for (i, (b, times)) in entries.into_iter().enumerate() {
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if slot[b].is_some() {
                return Err(Error::InvalidBeer(format!("vertex {b} listed twice")));
            }
            if !times.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidBeer(format!(
                    "active times of vertex {b} are not strictly increasing"
                )));
            }
            if let Some(&t) = times.iter().find(|&&t| t < 0) {
                return Err(Error::NegativeTime(t));
            }
            slot[b] = Some(i);
            vertices.push(b);
            active.push(times);
        }
        Ok(Self {
            vertices,
            active,
            slot,
        })
    }

    /// No beer vertices at all.
    pub fn empty(n: usize) -> Self {
        Self {
            vertices: Vec::new(),
            active: Vec::new(),
            slot: vec![None; n],
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.slot.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Position of `v` in the beer list, if it is a beer vertex.
    #[inline]
    pub fn slot(&self, v: VertexId) -> Option<usize> {
        self.slot.get(v).copied().flatten()
    }

    pub fn is_beer(&self, v: VertexId) -> bool {
        self.slot(v).is_some()
    }

    pub fn active_times(&self, slot: usize) -> &[Time] {
        &self.active[slot]
    }

    /// `T = max |T_b|`.
    pub fn max_active(&self) -> usize {
        self.active.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn times_of(&self, b: VertexId) -> Result<&[Time]> {
        self.slot(b)
            .map(|i| self.active[i].as_slice())
            .ok_or(Error::NotBeerVertex(b))
    }

    /// Smallest active instant of `b` that is `>= t`, or [`INF`].
    pub fn min_active_at_or_after(&self, b: VertexId, t: Time) -> Result<Time> {
        Ok(first_at_or_after(self.times_of(b)?, t))
    }

    /// Largest active instant of `b` that is `<= t`, or [`NEG_INF`].
    pub fn max_active_at_or_before(&self, b: VertexId, t: Time) -> Result<Time> {
        Ok(last_at_or_before(self.times_of(b)?, t))
    }

    /// Replaces every timetable by a Boolean switch: active vertices are
    /// open at every instant of `window`, inactive ones never.
    pub fn with_activation(&self, mask: &[bool], window: TimeWindow) -> Result<Self> {
        if mask.len() != self.len() {
            return Err(Error::ActivationLength {
                expected: self.len(),
                found: mask.len(),
            });
        }
        let active = mask
            .iter()
            .map(|&on| {
                if on {
                    (window.t_alpha..=window.t_omega).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        Ok(Self {
            vertices: self.vertices.clone(),
            active,
            slot: self.slot.clone(),
        })
    }
}

pub(crate) fn first_at_or_after(times: &[Time], t: Time) -> Time {
    let i = times.partition_point(|&x| x < t);
    times.get(i).copied().unwrap_or(INF)
}

pub(crate) fn last_at_or_before(times: &[Time], t: Time) -> Time {
    let i = times.partition_point(|&x| x <= t);
    if i == 0 {
        NEG_INF
    } else {
        times[i - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let bc = BeerConfig::new(3, vec![(1, vec![5]), (2, vec![2, 5, 9])]).unwrap();
        assert_eq!(bc.min_active_at_or_after(1, 3).unwrap(), 5);
        assert_eq!(bc.min_active_at_or_after(1, 6).unwrap(), INF);
        assert_eq!(bc.min_active_at_or_after(2, 5).unwrap(), 5);
        assert_eq!(bc.max_active_at_or_before(1, 6).unwrap(), 5);
        assert_eq!(bc.max_active_at_or_before(1, 4).unwrap(), NEG_INF);
        assert_eq!(bc.max_active_at_or_before(2, 5).unwrap(), 5);
        assert!(matches!(
            bc.min_active_at_or_after(0, 0),
            Err(Error::NotBeerVertex(0))
        ));
        assert!(matches!(
            bc.max_active_at_or_before(0, 0),
            Err(Error::NotBeerVertex(0))
        ));
    }

    #[test]
    fn sentinel_inputs() {
        let bc = BeerConfig::new(2, vec![(0, vec![1, 4])]).unwrap();
        assert_eq!(bc.min_active_at_or_after(0, INF).unwrap(), INF);
        assert_eq!(bc.max_active_at_or_before(0, NEG_INF).unwrap(), NEG_INF);
    }

    #[test]
    fn validation() {
        assert!(BeerConfig::new(2, vec![(2, vec![])]).is_err());
        assert!(BeerConfig::new(2, vec![(0, vec![3, 3])]).is_err());
        assert!(BeerConfig::new(2, vec![(0, vec![]), (0, vec![1])]).is_err());
        assert!(BeerConfig::new(2, vec![(1, vec![-2])]).is_err());
    }

    #[test]
    fn activation_mask() {
        let bc = BeerConfig::new(3, vec![(1, vec![5]), (2, vec![])]).unwrap();
        let w = TimeWindow::new(2, 4).unwrap();
        let on = bc.with_activation(&[false, true], w).unwrap();
        assert!(on.active_times(0).is_empty());
        assert_eq!(on.active_times(1), &[2, 3, 4]);
        assert!(matches!(
            bc.with_activation(&[true], w),
            Err(Error::ActivationLength {
                expected: 2,
                found: 1
            })
        ));
    }
}
