//! Finite groups, their group algebras over small finite fields, and
//! deciders for whether such an algebra is a centrally essential ring.

pub mod algebra;
pub mod catalog;
pub mod decision;
pub mod field;
pub mod group;
