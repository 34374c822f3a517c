# Generated by Django 4.2.7 on 2026-10-18 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CertificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('field_tag', models.CharField(choices=[('Q', 'Rationals'), ('Fp', 'Prime field'), ('Fp(t)', 'Rational functions over a prime field')], max_length=8)),
                ('characteristic', models.BigIntegerField(default=0)),
                ('dimension', models.PositiveSmallIntegerField()),
                ('generator_count', models.PositiveIntegerField()),
                ('cap', models.PositiveIntegerField()),
                ('verdict', models.CharField(choices=[('finite', 'Finite'), ('infinite', 'Infinite'), ('inconclusive', 'Inconclusive')], db_index=True, max_length=16)),
                ('group_order', models.PositiveBigIntegerField(blank=True, null=True)),
                ('witness_kind', models.CharField(blank=True, max_length=32)),
                ('input_digest', models.CharField(db_index=True, max_length=64)),
                ('request', models.JSONField()),
                ('certificate', models.JSONField()),
            ],
            options={
                'verbose_name': 'Certification Run',
                'verbose_name_plural': 'Certification Runs',
                'db_table': 'certification_runs',
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['field_tag', 'dimension'], name='certrun_field_dim_idx')],
            },
        ),
    ]
