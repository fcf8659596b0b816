import pytest
from pydantic import ValidationError

from cgcl_analytics.application.schemas import (
    AugmentationSchedule,
    EvalProtocol,
    RunConfig,
    TrainConfig,
)
from cgcl_analytics.application.seeds import derive_seed
from cgcl_analytics.domain.value_objects.augmentation import AugmentationKind
from cgcl_analytics.domain.value_objects.leader_policy import LeaderStrategy


class TestDeriveSeed:
    def test_deterministic(self):
        assert derive_seed(42, "train") == derive_seed(42, "train")

    def test_stages_and_keys_are_independent(self):
        seeds = {
            derive_seed(42, "train"),
            derive_seed(42, "eval"),
            derive_seed(43, "train"),
            derive_seed(42, "augment", 0, 1),
            derive_seed(42, "augment", 1, 0),
        }
        assert len(seeds) == 5

    def test_fits_in_63_bits(self):
        for seed in range(50):
            assert 0 <= derive_seed(seed, "leaders") < 2**63


class TestAugmentationSchedule:
    def test_k_drawn_within_range(self):
        schedule = AugmentationSchedule(kind="delete", k_max=3)
        ks = {schedule.spec_for(1, epoch, graph).k for epoch in range(5) for graph in range(20)}
        assert ks == {1, 2, 3}

    def test_fixed_k(self):
        schedule = AugmentationSchedule(kind="add", k=2)
        spec = schedule.spec_for(1, 0, 0)
        assert spec.k == 2
        assert spec.kind is AugmentationKind.ADD

    def test_mixed_draws_every_kind(self):
        schedule = AugmentationSchedule(kind="mixed")
        kinds = {schedule.spec_for(7, 0, graph).kind for graph in range(60)}
        assert kinds == set(AugmentationKind)

    def test_spec_is_reproducible(self):
        schedule = AugmentationSchedule()
        assert schedule.spec_for(3, 2, 5) == schedule.spec_for(3, 2, 5)
        assert schedule.spec_for(3, 2, 5) != schedule.spec_for(3, 3, 5)

    @pytest.mark.parametrize("fields", [{"k": 0}, {"kind": "shuffle"}, {"k_max": 0}])
    def test_invalid(self, fields):
        with pytest.raises(ValidationError):
            AugmentationSchedule(**fields)


@pytest.mark.parametrize(
    "model, fields",
    [
        (TrainConfig, {"batch": 1}),
        (TrainConfig, {"tau": 0}),
        (TrainConfig, {"momentum": 1.0}),
        (EvalProtocol, {"folds": 1}),
        (EvalProtocol, {"label_rate": 0}),
        (EvalProtocol, {"classifier": "tree"}),
        (RunConfig, {"leader_sizes": (0, 2)}),
        (RunConfig, {"leader_sizes": (1, 1)}),
    ],
)
def test_invalid_fields_rejected(model, fields):
    with pytest.raises(ValidationError):
        model(**fields)


class TestRunConfig:
    def test_fingerprint_ignores_paths(self):
        a = RunConfig(data_dir="a", out="x")
        b = RunConfig(data_dir="b", out="y")
        assert a.fingerprint() == b.fingerprint()
        assert len(a.fingerprint()) == 16

    def test_fingerprint_tracks_seed_and_hyperparameters(self):
        base = RunConfig()
        assert base.fingerprint() != RunConfig(seed=1).fingerprint()
        assert base.fingerprint() != RunConfig(train=TrainConfig(tau=0.2)).fingerprint()

    def test_derived_seeds(self):
        config = RunConfig(seed=5).with_derived_seeds()
        assert config.train.seed == derive_seed(5, "train")
        assert config.eval.seed == derive_seed(5, "eval") % 2**31
        assert config.fingerprint() != RunConfig(seed=5).fingerprint()

    def test_leader_policy(self):
        config = RunConfig(
            leader_sizes=(2, 4), samples_per_size=3, leader_strategy="degree-ranked"
        )
        policy = config.leader_policy()
        assert policy.sizes == (2, 4)
        assert policy.samples_per_size == 3
        assert policy.strategy is LeaderStrategy.DEGREE_RANKED
        assert policy.seed == derive_seed(config.seed, "leaders")

    def test_augmentation_policy_is_single_config(self):
        policy = RunConfig(augmentation=AugmentationSchedule(leader_size=3)).augmentation_policy()
        assert policy.sizes == (3,)
        assert policy.samples_per_size == 1
