//! One-hidden-layer perceptrons for the critic and actor networks.
//!
//! Both networks share the same symmetric sigmoid hidden activation. The
//! critic has a linear scalar output J(state ⊕ action); the actor maps a
//! state to one bounded output per control channel. Gradients are the exact
//! analytic partials of the squared prediction errors, written out by hand
//! so they can be verified against finite differences.

use nalgebra::{DMatrix, DVector};
use rand::Rng;

use crate::error::{Error, Result};

/// Output-layer activation of an [`MlpShape`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputActivation {
    /// Identity output (critic).
    Linear,
    /// Symmetric sigmoid output in (-1, 1) per component (actor).
    SigmoidSymmetric,
}

/// Layer sizes of a one-hidden-layer perceptron.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MlpShape {
    pub n_inputs: usize,
    pub n_hidden: usize,
    pub n_outputs: usize,
    pub output_activation: OutputActivation,
}

impl MlpShape {
    pub fn new(
        n_inputs: usize,
        n_hidden: usize,
        n_outputs: usize,
        output_activation: OutputActivation,
    ) -> Result<Self> {
        if n_inputs == 0 || n_hidden == 0 || n_outputs == 0 {
            return Err(Error::InvalidParameter(format!(
                "all layer sizes must be >= 1, got {n_inputs}x{n_hidden}x{n_outputs}"
            )));
        }
        Ok(Self {
            n_inputs,
            n_hidden,
            n_outputs,
            output_activation,
        })
    }

    /// Total number of weights: `n_hidden*n_inputs + n_outputs*n_hidden`.
    pub fn param_count(&self) -> usize {
        self.n_hidden * self.n_inputs + self.n_outputs * self.n_hidden
    }
}

/// Weight matrices of a one-hidden-layer perceptron.
///
/// `w1` is hidden x inputs, `w2` is outputs x hidden. There are no bias
/// terms: both control tasks have the origin as their goal state, so the
/// networks are built to pass through zero.
#[derive(Debug, Clone, PartialEq)]
pub struct MlpParams {
    pub w1: DMatrix<f64>,
    pub w2: DMatrix<f64>,
}

impl MlpParams {
    pub fn zeros(shape: &MlpShape) -> Self {
        Self {
            w1: DMatrix::zeros(shape.n_hidden, shape.n_inputs),
            w2: DMatrix::zeros(shape.n_outputs, shape.n_hidden),
        }
    }

    /// Uniform random weights in `[-half_range, half_range]`, drawn in
    /// flatten order (w1 row-major, then w2 row-major).
    pub fn init_uniform<R: Rng + ?Sized>(shape: &MlpShape, half_range: f64, rng: &mut R) -> Self {
        let mut params = Self::zeros(shape);
        for i in 0..shape.n_hidden {
            for j in 0..shape.n_inputs {
                params.w1[(i, j)] = rng.gen_range(-half_range..=half_range);
            }
        }
        for i in 0..shape.n_outputs {
            for j in 0..shape.n_hidden {
                params.w2[(i, j)] = rng.gen_range(-half_range..=half_range);
            }
        }
        params
    }

    pub fn shape_with(&self, output_activation: OutputActivation) -> MlpShape {
        MlpShape {
            n_inputs: self.w1.ncols(),
            n_hidden: self.w1.nrows(),
            n_outputs: self.w2.nrows(),
            output_activation,
        }
    }

    pub fn all_finite(&self) -> bool {
        self.w1.iter().all(|v| v.is_finite()) && self.w2.iter().all(|v| v.is_finite())
    }
}

/// Gradient of a scalar loss with respect to every weight in an [`MlpParams`].
#[derive(Debug, Clone)]
pub struct GradientSet {
    pub d_w1: DMatrix<f64>,
    pub d_w2: DMatrix<f64>,
}

/// Symmetric sigmoid `(1 - e^-q) / (1 + e^-q)`, evaluated as `tanh(q/2)`.
///
/// Range (-1, 1); its derivative in terms of the output p is `(1 - p^2)/2`.
#[inline]
pub fn act_sym(q: f64) -> f64 {
    (q / 2.0).tanh()
}

/// Derivative of [`act_sym`] expressed through its output value.
#[inline]
pub fn act_sym_deriv(p: f64) -> f64 {
    0.5 * (1.0 - p * p)
}

/// Critic forward pass: preactivations q = W1·x, hidden p = act_sym(q),
/// scalar output J = W2·p.
#[derive(Debug, Clone)]
pub struct CriticEval {
    pub j: f64,
    pub hidden: DVector<f64>,
    pub preact: DVector<f64>,
}

pub fn critic_forward(params: &MlpParams, input: &[f64]) -> Result<CriticEval> {
    if input.len() != params.w1.ncols() {
        return Err(Error::DimensionMismatch {
            context: "critic_forward input",
            expected: params.w1.ncols(),
            got: input.len(),
        });
    }
    if params.w2.nrows() != 1 {
        return Err(Error::DimensionMismatch {
            context: "critic_forward output rows",
            expected: 1,
            got: params.w2.nrows(),
        });
    }
    let x = DVector::from_column_slice(input);
    let preact = &params.w1 * &x;
    let hidden = preact.map(act_sym);
    let j = (&params.w2 * &hidden)[0];
    Ok(CriticEval { j, hidden, preact })
}

/// Actor forward pass: h = W1·s, g = act_sym(h), v = W2·g, u = act_sym(v)
/// applied per output component.
#[derive(Debug, Clone)]
pub struct ActorEval {
    pub u: DVector<f64>,
    pub hidden: DVector<f64>,
    pub hidden_preact: DVector<f64>,
    pub out_preact: DVector<f64>,
}

pub fn actor_forward(params: &MlpParams, state: &[f64]) -> Result<ActorEval> {
    if state.len() != params.w1.ncols() {
        return Err(Error::DimensionMismatch {
            context: "actor_forward state",
            expected: params.w1.ncols(),
            got: state.len(),
        });
    }
    let s = DVector::from_column_slice(state);
    let hidden_preact = &params.w1 * &s;
    let hidden = hidden_preact.map(act_sym);
    let out_preact = &params.w2 * &hidden;
    let u = out_preact.map(act_sym);
    Ok(ActorEval {
        u,
        hidden,
        hidden_preact,
        out_preact,
    })
}

/// Partials of E_c = e_c^2/2 with respect to the critic weights, where
/// e_c = [r + gamma*J(t)] - J(t-1) and only J(t) depends on the weights:
///
/// dE_c/dw2_i   = gamma * e_c * p_i
/// dE_c/dw1_ij  = gamma * e_c * w2_i * (1 - p_i^2)/2 * x_j
pub fn critic_gradients(
    params: &MlpParams,
    input: &[f64],
    e_c: f64,
    gamma: f64,
) -> Result<GradientSet> {
    let eval = critic_forward(params, input)?;
    let n_hidden = params.w1.nrows();
    let n_inputs = params.w1.ncols();
    let mut d_w1 = DMatrix::zeros(n_hidden, n_inputs);
    let mut d_w2 = DMatrix::zeros(1, n_hidden);
    let scale = gamma * e_c;
    for i in 0..n_hidden {
        let p = eval.hidden[i];
        d_w2[(0, i)] = scale * p;
        let back = scale * params.w2[(0, i)] * act_sym_deriv(p);
        for j in 0..n_inputs {
            d_w1[(i, j)] = back * input[j];
        }
    }
    Ok(GradientSet { d_w1, d_w2 })
}

/// dJ/du_k of the critic output with respect to its action inputs, which
/// occupy the trailing `n_actions` input columns:
///
/// dJ/du_k = sum_i w2_i * (1 - p_i^2)/2 * w1_{i, n_states + k}
pub fn critic_dj_du(critic: &MlpParams, eval: &CriticEval, n_actions: usize) -> DVector<f64> {
    let n_inputs = critic.w1.ncols();
    let n_states = n_inputs - n_actions;
    let mut dj_du = DVector::zeros(n_actions);
    for k in 0..n_actions {
        let col = n_states + k;
        let mut acc = 0.0;
        for i in 0..critic.w1.nrows() {
            acc += critic.w2[(0, i)] * act_sym_deriv(eval.hidden[i]) * critic.w1[(i, col)];
        }
        dj_du[k] = acc;
    }
    dj_du
}

/// Partials of E_a = e_a^2/2 with respect to the actor weights, chaining
/// e_a * dJ/du_k through the critic's action-input columns and the actor's
/// output activation:
///
/// dE_a/dwa2_ki = e_a * dJ/du_k * (1 - u_k^2)/2 * g_i
/// dE_a/dwa1_ij = e_a * [sum_k dJ/du_k * (1 - u_k^2)/2 * wa2_ki] * (1 - g_i^2)/2 * s_j
///
/// The critic is evaluated at `state ⊕ u(state)` with the current actor
/// output, so both forwards see the same pair.
pub fn actor_gradients(
    actor: &MlpParams,
    critic: &MlpParams,
    state: &[f64],
    e_a: f64,
) -> Result<GradientSet> {
    let actor_eval = actor_forward(actor, state)?;
    let n_actions = actor.w2.nrows();
    let mut input = Vec::with_capacity(state.len() + n_actions);
    input.extend_from_slice(state);
    input.extend(actor_eval.u.iter());
    let critic_eval = critic_forward(critic, &input)?;
    let dj_du = critic_dj_du(critic, &critic_eval, n_actions);

    let n_hidden = actor.w1.nrows();
    let n_state = actor.w1.ncols();
    let mut d_w1 = DMatrix::zeros(n_hidden, n_state);
    let mut d_w2 = DMatrix::zeros(n_actions, n_hidden);
    // Per-output chain up to the output preactivation: e_a * dJ/du_k * u_k'.
    let mut out_chain = DVector::zeros(n_actions);
    for k in 0..n_actions {
        out_chain[k] = e_a * dj_du[k] * act_sym_deriv(actor_eval.u[k]);
    }
    for i in 0..n_hidden {
        let g = actor_eval.hidden[i];
        for k in 0..n_actions {
            d_w2[(k, i)] = out_chain[k] * g;
        }
        let mut hidden_chain = 0.0;
        for k in 0..n_actions {
            hidden_chain += out_chain[k] * actor.w2[(k, i)];
        }
        let back = hidden_chain * act_sym_deriv(g);
        for j in 0..n_state {
            d_w1[(i, j)] = back * state[j];
        }
    }
    Ok(GradientSet { d_w1, d_w2 })
}

/// Gradient-descent update w -= lr * dE/dw.
pub fn apply_update(params: &mut MlpParams, grads: &GradientSet, lr: f64) {
    params.w1.iter_mut().zip(grads.d_w1.iter()).for_each(|(w, g)| *w -= lr * g);
    params.w2.iter_mut().zip(grads.d_w2.iter()).for_each(|(w, g)| *w -= lr * g);
}

/// Flattens weights to a vector: w1 row-major, then w2 row-major.
pub fn flatten(params: &MlpParams) -> DVector<f64> {
    let mut out = Vec::with_capacity(params.w1.len() + params.w2.len());
    for i in 0..params.w1.nrows() {
        for j in 0..params.w1.ncols() {
            out.push(params.w1[(i, j)]);
        }
    }
    for i in 0..params.w2.nrows() {
        for j in 0..params.w2.ncols() {
            out.push(params.w2[(i, j)]);
        }
    }
    DVector::from_vec(out)
}

/// Inverse of [`flatten`] for a given shape.
pub fn unflatten(vector: &[f64], shape: &MlpShape) -> Result<MlpParams> {
    if vector.len() != shape.param_count() {
        return Err(Error::DimensionMismatch {
            context: "unflatten vector length",
            expected: shape.param_count(),
            got: vector.len(),
        });
    }
    let mut params = MlpParams::zeros(shape);
    let mut idx = 0;
    for i in 0..shape.n_hidden {
        for j in 0..shape.n_inputs {
            params.w1[(i, j)] = vector[idx];
            idx += 1;
        }
    }
    for i in 0..shape.n_outputs {
        for j in 0..shape.n_hidden {
            params.w2[(i, j)] = vector[idx];
            idx += 1;
        }
    }
    Ok(params)
}
