//! Unsupervised deep embedded clustering of image patches.
//!
//! The pipeline trains a convolutional autoencoder with an attention-refined
//! bottleneck as a reconstruction pretext task, then attaches a Student-t
//! clustering head over the pooled embedding and fine-tunes jointly against a
//! self-sharpening target distribution. Everything runs on the CPU on top of
//! a small reverse-mode tensor engine.

pub mod autodiff;
pub mod clustering;
pub mod datapipe;
pub mod evaluation;
pub mod explain;
pub mod network;
pub mod optim;
pub mod synth;
pub mod tensor;
pub mod training;

pub use tensor::{Scalar, Tensor};
