//! Replica scheduling.
//!
//! Every replica derives its own random stream from the master key and its
//! index, and results are collected in index order, so the parallel and
//! sequential paths produce identical output. The `parallel` feature (on by
//! default) routes [`run_replicas`] through rayon's work stealing; without it
//! the sequential loop is used.

use crate::rng::{ns, StreamKey};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Derived key for one replica.
pub fn replica_key(master: StreamKey, replica: u32) -> StreamKey {
    master.child(ns::REPLICA).child(replica as u64)
}

/// Run `f` once per replica and collect the results in replica order.
pub fn run_replicas<T, F>(master: StreamKey, replicas: u32, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32, StreamKey) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..replicas)
            .into_par_iter()
            .map(|i| f(i, replica_key(master, i)))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_replicas_sequential(master, replicas, f)
    }
}

/// Sequential fallback, always available (the benchmark suite compares the
/// two paths directly).
pub fn run_replicas_sequential<T, F>(master: StreamKey, replicas: u32, f: F) -> Vec<T>
where
    F: Fn(u32, StreamKey) -> T,
{
    (0..replicas)
        .map(|i| f(i, replica_key(master, i)))
        .collect()
}
