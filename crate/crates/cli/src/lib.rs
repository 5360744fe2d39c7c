//! Library backing the `witcount` binary. The command handlers live here so
//! they can be unit tested without spawning processes; `main.rs` only does
//! argument parsing, thread-pool setup, and exit-code mapping.

pub mod bench;
pub mod check;
pub mod commands;
pub mod error;
pub mod report;
pub mod selftest;

pub use error::CliError;

/// Runs `f` on a rayon pool of `threads` workers (0 means the library
/// default, i.e. all cores). Without the `parallel` feature the pool size
/// is meaningless and `f` simply runs on the calling thread.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        if threads == 0 {
            return f();
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("rayon pool construction cannot fail for positive sizes")
            .install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}
