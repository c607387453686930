//! `bearlab` is a small, self-contained offline reinforcement-learning
//! laboratory. It provides:
//!
//! - exact tabular MDP machinery (Bellman operators, Q-iteration,
//!   discounted marginals, rollouts) in [`mdp`];
//! - support-constrained backups with empirical error-propagation and
//!   concentrability bound checks, plus the gridworld error-propagation
//!   experiment, in [`constrained`];
//! - kernels and the sampled MMD^2 estimator, with the
//!   support-vs-density simulation, in [`mmd`];
//! - a minimal dense-network stack (reverse-mode gradients, Adam,
//!   tanh-Gaussian policy heads) in [`nn`];
//! - desk-scale continuous-control environments and dataset tooling in
//!   [`envs`];
//! - the BEAR actor-critic (ensemble critics, MMD-constrained policy
//!   improvement via dual gradient descent) and its baselines in
//!   [`bear`].
//!
//! Everything is deterministic given explicit seeds: random number
//! streams are ChaCha-based and owned by the caller, so any experiment
//! can be replayed bit-for-bit.

pub mod bear;
pub mod constrained;
pub mod envs;
pub mod mdp;
pub mod mmd;
pub mod nn;
pub mod textfmt;
