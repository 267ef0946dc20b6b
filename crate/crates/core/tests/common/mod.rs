#![allow(dead_code)]

pub mod moves;
