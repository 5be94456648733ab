//! Report types (in progress).
